// Command-line entry point: every subcommand is a reproducible check that
// emits a JSON certificate. Exit codes: 0 check passed, 1 check failed,
// 2 invalid flags.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "degmat/acceptance.hpp"
#include "degmat/certificate.hpp"
#include "degmat/generators.hpp"
#include "degmat/groebner.hpp"
#include "degmat/repcheck.hpp"
#include "degmat/sampling.hpp"
#include "degmat/verify.hpp"

using namespace degmat;

namespace {

struct CommonFlags {
  std::string order = "row";
  std::string cert_path;
  bool timings = false;
};

VarLayout layout_of(const std::string& order) {
  if (order == "row") return VarLayout::RowMajor;
  if (order == "col") return VarLayout::ColMajor;
  throw CLI::ValidationError("--order must be 'row' or 'col'");
}

Json base_certificate(const std::string& subcommand, Json config = Json::object()) {
  return Json{{"tool", "degmat"},
              {"version", "1.0.0"},
              {"subcommand", subcommand},
              {"config", std::move(config)}};
}

int finish(Json cert, bool passed, const CommonFlags& common, double seconds) {
  cert["passed"] = passed;
  if (common.timings) cert["wall_time_seconds"] = seconds;
  write_certificate(cert, common.cert_path);
  return passed ? 0 : 1;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

GeneratorSet family_by_name(const RingPtr& ring, const std::string& family) {
  if (family == "quadrics") return det_pencil_generators(ring);
  if (family == "cubics") return block_cubics(ring);
  if (family == "quartics") return quartic_products(ring);
  if (family == "fano") return fano_minors(ring);
  throw CLI::ValidationError("unknown family: " + family);
}

std::vector<Poly> elements_by_name(const RingPtr& ring, const std::string& family) {
  if (family == "basis") return candidate_basis(ring);
  return family_by_name(ring, family).elements;
}

Tensor read_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  Json j;
  in >> j;
  return tensor_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the vanishing ideal of Sing_{n,m}"};
  app.require_subcommand(1);

  CommonFlags common;

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "emit a generator family plus a manifest");
  std::string gen_family = "basis";
  int gen_n = 2, gen_m = 3;
  std::string gen_out, gen_manifest;
  uint64_t gen_limit = 200;
  gen->add_option("--family", gen_family,
                  "quadrics|cubics|quartics|basis|fano|products");
  gen->add_option("--n", gen_n, "matrix size")->required();
  gen->add_option("--m", gen_m, "number of slices")->required();
  gen->add_option("--order", common.order, "within-slice variable order: row|col");
  gen->add_option("--out", gen_out, "polynomial output path (default stdout)");
  gen->add_option("--manifest", gen_manifest, "manifest JSON path");
  gen->add_option("--limit", gen_limit, "max products emitted for --family products");

  // ---- gb-check ----
  auto* gb = app.add_subcommand("gb-check", "verify the candidate basis is a Groebner basis");
  int gb_n = 2, gb_m = 3, gb_jobs = 0;
  gb->add_option("--n", gb_n, "matrix size (candidate basis needs 2)")->required();
  gb->add_option("--m", gb_m, "number of slices")->required();
  gb->add_option("--jobs", gb_jobs, "worker threads (0 = hardware)");
  gb->add_option("--order", common.order, "row|col");

  // ---- radical ----
  auto* radical = app.add_subcommand("radical", "square-free leading monomial check");
  int rad_n = 2, rad_m = 3;
  radical->add_option("--n", rad_n)->required();
  radical->add_option("--m", rad_m)->required();
  radical->add_option("--order", common.order, "row|col");

  // ---- nonmember ----
  auto* nonmember =
      app.add_subcommand("nonmember", "non-radicality witness: cubic outside the quadric ideal");
  int non_n = 2, non_m = 3;
  nonmember->add_option("--n", non_n)->required();
  nonmember->add_option("--m", non_m)->required();
  nonmember->add_option("--order", common.order, "row|col");

  // ---- quartic-check ----
  auto* quartic =
      app.add_subcommand("quartic-check", "quartic products lie in <quadrics, cubics> in degree 4");
  int qc_n = 2, qc_m = 3;
  quartic->add_option("--n", qc_n)->required();
  quartic->add_option("--m", qc_m)->required();
  quartic->add_option("--order", common.order, "row|col");

  // ---- sample ----
  auto* sample = app.add_subcommand("sample", "sample exact points of Sing_{n,m}");
  int sm_n = 2, sm_m = 3, sm_s = 0, sm_count = 1;
  uint64_t sm_seed = 0;
  std::string sm_out;
  sample->add_option("--n", sm_n)->required();
  sample->add_option("--m", sm_m)->required();
  sample->add_option("--s", sm_s, "compression parameter, 0 <= s <= n-1");
  sample->add_option("--seed", sm_seed)->required();
  sample->add_option("--count", sm_count);
  sample->add_option("--out", sm_out, "output path (default stdout)");

  // ---- vanish ----
  auto* vanish = app.add_subcommand("vanish", "evaluate a family on sampled points");
  int va_n = 2, va_m = 3, va_samples = 10;
  uint64_t va_seed = 0;
  std::string va_family = "basis";
  vanish->add_option("--n", va_n)->required();
  vanish->add_option("--m", va_m)->required();
  vanish->add_option("--family", va_family, "basis|quadrics|cubics|quartics|fano");
  vanish->add_option("--samples", va_samples);
  vanish->add_option("--seed", va_seed)->required();
  vanish->add_option("--order", common.order, "row|col");

  // ---- act ----
  auto* act_cmd = app.add_subcommand("act", "apply a random group element to a tensor");
  std::string act_in, act_out;
  uint64_t act_seed = 0;
  act_cmd->add_option("--in", act_in, "tensor JSON path")->required();
  act_cmd->add_option("--seed", act_seed)->required();
  act_cmd->add_option("--out", act_out, "output path (default stdout)");

  // ---- member ----
  auto* member = app.add_subcommand("member", "degree-wise ideal membership by linear algebra");
  int me_n = 2, me_m = 3, me_degree = 3;
  std::string me_poly, me_poly_file, me_basis = "quadrics";
  member->add_option("--n", me_n)->required();
  member->add_option("--m", me_m)->required();
  member->add_option("--degree", me_degree)->required();
  member->add_option("--poly", me_poly, "polynomial in canonical syntax");
  member->add_option("--poly-file", me_poly_file, "file with one polynomial per line");
  member->add_option("--basis", me_basis, "quadrics|quadrics-cubics");
  member->add_option("--order", common.order, "row|col");

  // ---- dit ----
  auto* dit = app.add_subcommand("dit", "randomized determinant identity testing");
  std::string dit_in;
  int dit_trials = 10;
  long dit_bound = 10;
  uint64_t dit_seed = 0;
  dit->add_option("--in", dit_in, "tensor JSON path")->required();
  dit->add_option("--trials", dit_trials);
  dit->add_option("--seed", dit_seed)->required();
  dit->add_option("--bound", dit_bound, "coefficient bound for random lambda");

  // ---- rep ----
  auto* rep = app.add_subcommand("rep", "representation-theoretic checks");
  rep->require_subcommand(1);
  auto* rep_cauchy = rep->add_subcommand("cauchy", "Cauchy identity dimension check");
  int rc_d = 2, rc_m = 2, rc_q = 2;
  rep_cauchy->add_option("--d", rc_d)->required();
  rep_cauchy->add_option("--m", rc_m)->required();
  rep_cauchy->add_option("--q", rc_q)->required();
  auto* rep_lr = rep->add_subcommand("lr", "Littlewood-Richardson coefficient");
  std::string lr_lambda, lr_mu, lr_nu;
  rep_lr->add_option("--lambda", lr_lambda)->required();
  rep_lr->add_option("--mu", lr_mu)->required();
  rep_lr->add_option("--nu", lr_nu)->required();
  auto* rep_obstruct = rep->add_subcommand("obstruct", "LR obstruction check");
  int ob_n = 2, ob_dmax = 4;
  rep_obstruct->add_option("--n", ob_n)->required();
  rep_obstruct->add_option("--dmax", ob_dmax);

  // ---- suite ----
  auto* suite = app.add_subcommand("suite", "run the full acceptance battery");
  int suite_jobs = 0;
  std::string suite_only;
  suite->add_option("--jobs", suite_jobs, "worker threads (0 = hardware)");
  suite->add_option("--only", suite_only, "comma-separated criterion ids");

  for (auto* sub :
       {gen, gb, radical, nonmember, quartic, sample, vanish, act_cmd, member, dit, suite}) {
    sub->add_option("--cert", common.cert_path, "certificate path (default stdout)");
    sub->add_flag("--timings", common.timings, "include wall time in the certificate");
  }
  for (auto* sub : {rep_cauchy, rep_lr, rep_obstruct}) {
    sub->add_option("--cert", common.cert_path, "certificate path (default stdout)");
    sub->add_flag("--timings", common.timings, "include wall time in the certificate");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Timer timer;

    if (*gen) {
      RingPtr ring = make_ring(gen_n, gen_m, layout_of(common.order));
      Json manifest = base_certificate("gen", Json{{"family", gen_family}, {"n", gen_n}, {"m", gen_m}, {"order", common.order}, {"limit", gen_limit}});
      manifest["ring"] = ring_to_json(*ring);
      manifest["family"] = gen_family;
      std::ostringstream lines;
      if (gen_family == "products") {
        ProductEquationStream stream(ring);
        if (!stream.meets_bound())
          std::cerr << "warning: m below n^2-2n+3, product stream is empty\n";
        uint64_t count = std::min<uint64_t>(gen_limit, stream.total_count());
        for (uint64_t i = 0; i < count; ++i)
          lines << stream.product(stream.item_at(i)).to_string() << "\n";
        manifest["count"] = count;
        manifest["total_count"] = stream.total_count();
        manifest["factor_counts"] =
            Json{{"jm", stream.jm().size()}, {"j1", stream.j1().size()}, {"j2", stream.j2().size()}};
      } else if (gen_family == "basis") {
        std::vector<Poly> elements = candidate_basis(ring);
        for (const auto& p : elements) lines << p.to_string() << "\n";
        manifest["count"] = elements.size();
      } else {
        GeneratorSet set = family_by_name(ring, gen_family);
        for (const auto& p : set.elements) lines << p.to_string() << "\n";
        manifest["count"] = set.elements.size();
        Json prov = Json::array();
        for (const auto& p : set.provenance) prov.push_back(p);
        manifest["provenance"] = std::move(prov);
        if (gen_family == "fano")
          manifest["flattening"] = poly_matrix_to_json(flattening(ring, FlatteningMode::Slice));
      }
      write_text(gen_out, lines.str());
      if (!gen_manifest.empty()) write_certificate(manifest, gen_manifest);
      return 0;
    }

    if (*gb) {
      RingPtr ring = make_ring(gb_n, gb_m, layout_of(common.order));
      std::vector<Poly> basis = candidate_basis(ring);
      GbCheckOptions opts;
      opts.threads = gb_jobs;
      BasisCheckResult check = is_groebner_basis(basis, opts);
      Json cert = base_certificate("gb-check", Json{{"n", gb_n}, {"m", gb_m}, {"jobs", gb_jobs}, {"order", common.order}});
      cert["ring"] = ring_to_json(*ring);
      cert["result"] = basis_check_to_json(check);
      Json gens = Json::array();
      for (const auto& g : basis) gens.push_back(g.to_string());
      cert["generators"] = std::move(gens);
      cert["squarefree"] = [&] {
        GroebnerBasis gbasis;
        gbasis.generators = basis;
        return leading_ideal_squarefree(gbasis);
      }();
      return finish(std::move(cert), check.is_basis, common, timer.seconds());
    }

    if (*radical) {
      RingPtr ring = make_ring(rad_n, rad_m, layout_of(common.order));
      GroebnerBasis basis;
      basis.generators = candidate_basis(ring);
      bool squarefree = leading_ideal_squarefree(basis);
      Json cert = base_certificate("radical", Json{{"n", rad_n}, {"m", rad_m}, {"order", common.order}});
      cert["ring"] = ring_to_json(*ring);
      cert["generator_count"] = basis.generators.size();
      cert["squarefree"] = squarefree;
      Json offenders = Json::array();
      bool minimal_squarefree = true;
      for (const auto& g : basis.generators) {
        if (g.leading_monomial().squarefree()) continue;
        bool divisible = false;
        for (const auto& other : basis.generators)
          if (&other != &g &&
              Monomial::divides(other.leading_monomial(), g.leading_monomial())) {
            divisible = true;
            break;
          }
        if (!divisible) minimal_squarefree = false;
        offenders.push_back(g.to_string());
      }
      cert["offenders"] = std::move(offenders);
      cert["leading_ideal_minimal_generators_squarefree"] = minimal_squarefree;
      return finish(std::move(cert), squarefree, common, timer.seconds());
    }

    if (*nonmember) {
      RingPtr ring = make_ring(non_n, non_m, layout_of(common.order));
      std::vector<Poly> quadrics = det_pencil_generators(ring).elements;
      GroebnerBasis gbasis = buchberger(quadrics);
      std::vector<Poly> cubics = block_cubics(ring).elements;
      PolySpan span3 = degreewise_span(ring, quadrics, 3);
      Json cert = base_certificate("nonmember", Json{{"n", non_n}, {"m", non_m}, {"order", common.order}});
      cert["ring"] = ring_to_json(*ring);
      cert["quadric_gb_size"] = gbasis.generators.size();
      bool witness_found = false, agree = true;
      for (const auto& cubic : cubics) {
        Poly remainder = normal_form(cubic, gbasis.generators);
        bool member = span3.contains(cubic);
        if (remainder.is_zero() != member) agree = false;
        if (!remainder.is_zero() && !member && !witness_found) {
          witness_found = true;
          cert["witness"] = Json{{"cubic", cubic.to_string()},
                                 {"normal_form", remainder.to_string()},
                                 {"degreewise_member", member}};
        }
      }
      cert["oracles_agree"] = agree;
      cert["witness_found"] = witness_found;
      return finish(std::move(cert), witness_found && agree, common, timer.seconds());
    }

    if (*quartic) {
      RingPtr ring = make_ring(qc_n, qc_m, layout_of(common.order));
      std::vector<Poly> gens = det_pencil_generators(ring).elements;
      for (auto& c : block_cubics(ring).elements) gens.push_back(std::move(c));
      PolySpan span4 = degreewise_span(ring, gens, 4);
      std::vector<Poly> quartics = quartic_products(ring).elements;
      size_t members = 0;
      Json failures = Json::array();
      for (const auto& q : quartics) {
        if (span4.contains(q))
          ++members;
        else
          failures.push_back(q.to_string());
      }
      Json cert = base_certificate("quartic-check", Json{{"n", qc_n}, {"m", qc_m}, {"order", common.order}});
      cert["ring"] = ring_to_json(*ring);
      cert["quartic_count"] = quartics.size();
      cert["members"] = members;
      cert["failures"] = std::move(failures);
      return finish(std::move(cert), members == quartics.size(), common, timer.seconds());
    }

    if (*sample) {
      Json out;
      if (sm_count == 1) {
        out = tensor_to_json(sample_sing(random_compression_spec(sm_n, sm_m, sm_s, sm_seed)));
      } else {
        out = Json::array();
        for (int i = 0; i < sm_count; ++i)
          out.push_back(
              tensor_to_json(sample_sing(random_compression_spec(sm_n, sm_m, sm_s, sm_seed + i))));
      }
      write_text(sm_out, out.dump(2) + "\n");
      return 0;
    }

    if (*vanish) {
      RingPtr ring = make_ring(va_n, va_m, layout_of(common.order));
      std::vector<Poly> elements = elements_by_name(ring, va_family);
      Json cert = base_certificate("vanish", Json{{"n", va_n}, {"m", va_m}, {"family", va_family}, {"samples", va_samples}, {"seed", va_seed}, {"order", common.order}});
      cert["ring"] = ring_to_json(*ring);
      cert["family"] = va_family;
      cert["element_count"] = elements.size();
      cert["samples"] = va_samples;
      cert["seed"] = va_seed;
      bool ok = true;
      for (int i = 0; i < va_samples && ok; ++i) {
        int s = i % va_n;
        Tensor T = sample_sing(random_compression_spec(va_n, va_m, s, va_seed + i));
        VanishReport report = vanish_check(elements, T);
        if (!report.all_vanish) {
          ok = false;
          cert["failure"] = Json{{"sample_index", i},
                                 {"element_index", *report.failing_index},
                                 {"element", elements[*report.failing_index].to_string()}};
        }
      }
      return finish(std::move(cert), ok, common, timer.seconds());
    }

    if (*act_cmd) {
      Tensor T = read_tensor(act_in);
      Rng rng(act_seed);
      GroupElement g = random_group_element(T.m, T.n, rng);
      Tensor out = act(g, T);
      Json j{{"input", tensor_to_json(T)},
             {"group", Json{{"U", qmat_to_json(g.U)}, {"V", qmat_to_json(g.V)}, {"W", qmat_to_json(g.W)}}},
             {"output", tensor_to_json(out)}};
      write_text(act_out, j.dump(2) + "\n");
      return 0;
    }

    if (*member) {
      RingPtr ring = make_ring(me_n, me_m, layout_of(common.order));
      std::vector<Poly> basis = det_pencil_generators(ring).elements;
      if (me_basis == "quadrics-cubics")
        for (auto& c : block_cubics(ring).elements) basis.push_back(std::move(c));
      else if (me_basis != "quadrics")
        throw CLI::ValidationError("--basis must be quadrics or quadrics-cubics");
      std::vector<std::string> texts;
      if (!me_poly.empty()) texts.push_back(me_poly);
      if (!me_poly_file.empty()) {
        std::ifstream in(me_poly_file);
        if (!in) throw std::runtime_error("cannot open: " + me_poly_file);
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) texts.push_back(line);
      }
      if (texts.empty()) throw CLI::ValidationError("need --poly or --poly-file");
      PolySpan span = degreewise_span(ring, basis, me_degree);
      Json cert = base_certificate("member", Json{{"n", me_n}, {"m", me_m}, {"degree", me_degree}, {"basis", me_basis}, {"order", common.order}});
      cert["ring"] = ring_to_json(*ring);
      cert["degree"] = me_degree;
      cert["basis"] = me_basis;
      Json verdicts = Json::array();
      bool all_members = true;
      for (const auto& text : texts) {
        Poly f = Poly::parse(ring, text);
        bool member_flag = span.contains(f);
        all_members = all_members && member_flag;
        verdicts.push_back(Json{{"poly", f.to_string()}, {"member", member_flag}});
      }
      cert["verdicts"] = std::move(verdicts);
      return finish(std::move(cert), all_members, common, timer.seconds());
    }

    if (*dit) {
      Tensor T = read_tensor(dit_in);
      DitVerdict v = dit_random(T, dit_trials, dit_seed, dit_bound);
      Json cert = base_certificate("dit", Json{{"in", dit_in}, {"trials", dit_trials}, {"seed", dit_seed}, {"bound", dit_bound}});
      cert["trials"] = dit_trials;
      cert["seed"] = dit_seed;
      cert["bound"] = dit_bound;
      cert["all_singular"] = v.all_singular;
      if (v.witness) cert["witness"] = *v.witness;
      return finish(std::move(cert), v.all_singular, common, timer.seconds());
    }

    if (*rep_cauchy) {
      CauchyReport r = cauchy_check(rc_d, rc_m, rc_q);
      Json cert = base_certificate("rep cauchy", Json{{"d", rc_d}, {"m", rc_m}, {"q", rc_q}});
      cert["d"] = rc_d;
      cert["m"] = rc_m;
      cert["q"] = rc_q;
      cert["lhs"] = r.lhs.get_str();
      cert["rhs"] = r.rhs.get_str();
      return finish(std::move(cert), r.equal, common, timer.seconds());
    }

    if (*rep_lr) {
      Partition lam = Partition::parse(lr_lambda);
      Partition mu = Partition::parse(lr_mu);
      Partition nu = Partition::parse(lr_nu);
      long c = lr_coefficient(lam, mu, nu);
      Json cert = base_certificate("rep lr", Json{{"lambda", lr_lambda}, {"mu", lr_mu}, {"nu", lr_nu}});
      cert["lambda"] = lam.to_string();
      cert["mu"] = mu.to_string();
      cert["nu"] = nu.to_string();
      cert["coefficient"] = c;
      return finish(std::move(cert), true, common, timer.seconds());
    }

    if (*rep_obstruct) {
      ObstructionReport r = obstruction_check(ob_n, ob_dmax);
      Json cert = base_certificate("rep obstruct", Json{{"n", ob_n}, {"dmax", ob_dmax}});
      cert["n"] = r.n;
      cert["dmax"] = r.dprime_max;
      cert["column_first_part_below_n"] = r.column_first_part_below_n;
      cert["all_products_contain_row_n"] = r.all_products_contain_row_n;
      cert["triples_checked"] = r.triples_checked;
      cert["positive_coefficients"] = r.positive_coefficients;
      return finish(std::move(cert), r.ok, common, timer.seconds());
    }

    if (*suite) {
      AcceptanceOptions opts;
      opts.jobs = suite_jobs;
      if (!suite_only.empty()) {
        std::stringstream ss(suite_only);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) opts.only.insert(std::stoi(item));
      }
      opts.on_result = [](const CriterionResult& r) {
        std::fprintf(stderr, "[%s] criterion %2d: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL",
                     r.id, r.name.c_str(), r.seconds);
        if (!r.note.empty()) std::fprintf(stderr, "       note: %s\n", r.note.c_str());
      };
      auto results = run_acceptance(opts);
      Json cert = base_certificate("suite", Json{{"jobs", suite_jobs}, {"only", suite_only}});
      Json arr = Json::array();
      for (const auto& r : results) {
        Json entry{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}};
        if (!r.note.empty()) entry["note"] = r.note;
        if (common.timings) entry["seconds"] = r.seconds;
        arr.push_back(std::move(entry));
      }
      cert["criteria"] = std::move(arr);
      return finish(std::move(cert), all_passed(results), common, timer.seconds());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
