#include "degmat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace degmat {

const RingPtr& common_ring(const Poly& a, const Poly& b) {
  // A default-constructed polynomial is the universal zero.
  if (!a.ring()) {
    if (!b.ring()) throw std::invalid_argument("common_ring: both polynomials ring-free");
    return b.ring();
  }
  if (!b.ring()) return a.ring();
  if (!a.ring()->compatible(*b.ring()))
    throw std::invalid_argument("common_ring: ring mismatch");
  return a.ring();
}

std::strong_ordering compare_monomials(const PolyRing& ring, const Monomial& a,
                                       const Monomial& b) {
  return Monomial::compare(a, b, ring.nvars());
}

Poly Poly::constant(RingPtr ring, Rat c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Poly Poly::variable(const RingPtr& ring, VarId v) {
  return variable(ring, ring->index_of(v));
}

Poly Poly::variable(const RingPtr& ring, int index) {
  if (index < 0 || index >= ring->nvars())
    throw std::out_of_range("Poly::variable: bad index");
  Poly p(ring);
  p.terms_.push_back({Monomial::variable(index), Rat(1)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const int nv = ring->nvars();
  std::sort(terms.begin(), terms.end(), [nv](const Term& a, const Term& b) {
    return Monomial::compare(a.mono, b.mono, nv) == std::strong_ordering::greater;
  });
  Poly p(std::move(ring));
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return terms_.front();
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const RingPtr& ring = common_ring(a, b);
  const int nv = ring->nvars();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto cmp = Monomial::compare(a.terms_[i].mono, b.terms_[j].mono, nv);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a.terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(b.terms_[j++]);
    } else {
      Rat c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) out.push_back({a.terms_[i].mono, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  Poly r(ring);
  r.terms_ = std::move(out);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  const RingPtr& ring = common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(ring);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      out.push_back({Monomial::mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
  return Poly::from_terms(ring, std::move(out));
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly::zero(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::mul_term(const Rat& c, const Monomial& m) const {
  if (c == 0) return Poly::zero(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({Monomial::mul(t.mono, m), t.coeff * c});
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
  Rat inv = 1 / leading_coeff();
  return scaled(inv);
}

Rat Poly::evaluate(std::span<const Rat> values) const {
  if (!ring_) return Rat(0);
  if (static_cast<int>(values.size()) != ring_->nvars())
    throw std::invalid_argument("evaluate: value count does not match ring");
  Rat sum(0);
  for (const auto& t : terms_) {
    Rat prod = t.coeff;
    for (uint64_t m = t.mono.support(); m; m &= m - 1) {
      int i = __builtin_ctzll(m);
      const Rat& v = values[static_cast<size_t>(i)];
      for (int e = 0; e < t.mono.exponent(i); ++e) prod *= v;
    }
    sum += prod;
  }
  return sum;
}

bool Poly::operator==(const Poly& b) const {
  if (terms_.size() != b.terms_.size()) return false;
  if (ring_ && b.ring_ && !ring_->compatible(*b.ring_)) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == b.terms_[i].mono) || terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t t = 0; t < terms_.size(); ++t) {
    const Term& term = terms_[t];
    bool negative = term.coeff < 0;
    Rat mag = negative ? Rat(-term.coeff) : term.coeff;
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = term.mono.exponent(i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ring_->var_name(i);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += rat_to_string(mag) + "*" + vars;
    }
  }
  return out;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw std::invalid_argument("Poly::parse: expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos));
  }
  std::string integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("Poly::parse: expected integer at position " +
                                  std::to_string(start));
    return s.substr(start, pos - start);
  }
};

}  // namespace

Poly Poly::parse(const RingPtr& ring, const std::string& text) {
  Scanner sc{text};
  std::vector<Term> terms;
  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.consume('+')) {
      sign = 1;
    } else if (sc.consume('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("Poly::parse: expected '+' or '-' between terms");
    }
    first = false;

    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      std::string num = sc.integer();
      std::string lit = num;
      if (sc.consume('/')) lit += "/" + sc.integer();
      coeff = parse_rat(lit);
      have_coeff = true;
    }
    Monomial mono;
    bool have_vars = false;
    while (true) {
      if (have_coeff || have_vars) {
        size_t save = sc.pos;
        if (!sc.consume('*')) break;
        if (sc.peek() != 'x') {
          sc.pos = save;
          break;
        }
      } else if (sc.peek() != 'x') {
        break;
      }
      sc.expect('x');
      sc.expect('[');
      int k = std::stoi(sc.integer());
      sc.expect(']');
      sc.expect('[');
      int i = std::stoi(sc.integer());
      sc.expect(']');
      sc.expect('[');
      int j = std::stoi(sc.integer());
      sc.expect(']');
      int e = 1;
      if (sc.consume('^')) e = std::stoi(sc.integer());
      int index = ring->index_of(VarId{k, i, j});
      mono.set_exponent(index, mono.exponent(index) + e);
      have_vars = true;
    }
    if (!have_coeff && !have_vars)
      throw std::invalid_argument("Poly::parse: empty term at position " + std::to_string(sc.pos));
    terms.push_back({mono, sign < 0 ? Rat(-coeff) : coeff});
  }
  return from_terms(ring, std::move(terms));
}

}  // namespace degmat
