#include "bw/poly.hpp"

#include <algorithm>
#include <string>

#include "bw/error.hpp"

namespace bw {

char var_name(Var v) noexcept {
  switch (v) {
    case Var::X: return 'x';
    case Var::Y: return 'y';
    case Var::Z: return 'z';
  }
  return '?';
}

Mono lcm(const Mono& a, const Mono& b) {
  return Mono{std::max(a.exp[0], b.exp[0]), std::max(a.exp[1], b.exp[1]),
              std::max(a.exp[2], b.exp[2])};
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

namespace {

int lex_compare(const Mono& a, const Mono& b) {
  // z > y > x
  for (std::size_t i = kNumVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare(MonomialOrder order, const Mono& a, const Mono& b) {
  if (order == MonomialOrder::GrLex) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db ? -1 : 1;
  }
  return lex_compare(a, b);
}

// ---------------------------------------------------------------------------

Poly::Poly(const Rat& c, MonomialOrder order) : order_(order) {
  if (c != 0) terms_.push_back(Term{Mono{}, c});
}

Poly Poly::var(Var v, MonomialOrder order) {
  return monomial(Mono::of(v), Rat(1), order);
}

Poly Poly::monomial(const Mono& m, const Rat& c, MonomialOrder order) {
  Poly p(order);
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms, MonomialOrder order) {
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare(order, a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return from_canonical(std::move(out), order);
}

Poly Poly::from_canonical(std::vector<Term> terms, MonomialOrder order) {
  Poly p(order);
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(terms_, order);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rat(0);
}

Rat Poly::coeff(const Mono& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Rat(0);
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Poly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

bool Poly::uses(Var v) const { return degree_in(v) > 0; }

bool Poly::only_uses(std::initializer_list<Var> allowed) const {
  for (Var v : kAllVars) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end() && uses(v)) {
      return false;
    }
  }
  return true;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two canonical term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                        MonomialOrder order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare(order, a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].mono, sign > 0 ? b[j].coeff : Rat(-b[j].coeff)});
      ++j;
    } else {
      Rat s = sign > 0 ? Rat(a[i].coeff + b[j].coeff) : Rat(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(Term{b[j].mono, sign > 0 ? b[j].coeff : Rat(-b[j].coeff)});
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  if (other.order_ != order_) return *this += other.with_order(order_);
  terms_ = merge(terms_, other.terms_, +1, order_);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.order_ != order_) return *this -= other.with_order(order_);
  terms_ = merge(terms_, other.terms_, -1, order_);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.order_);
  if (b.size() == 1) return a.mul_term(b.leading_mono(), b.leading_coeff());
  if (a.size() == 1) return b.with_order(a.order_).mul_term(a.leading_mono(), a.leading_coeff());
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
    }
  }
  return Poly::from_terms(std::move(products), a.order_);
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
  Poly p(order_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the result stays sorted.
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return p;
}

Poly Poly::sub_mul_term(const Mono& m, const Rat& c, const Poly& g) const {
  if (g.order_ != order_) return sub_mul_term(m, c, g.with_order(order_));
  Poly p(order_);
  p.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    const Mono gm = g.terms_[j].mono * m;
    const int cmp = compare(order_, terms_[i].mono, gm);
    if (cmp > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      p.terms_.push_back(Term{gm, -(g.terms_[j].coeff * c)});
      ++j;
    } else {
      Rat s = terms_[i].coeff - g.terms_[j].coeff * c;
      if (s != 0) p.terms_.push_back(Term{gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) {
    p.terms_.push_back(Term{g.terms_[j].mono * m, -(g.terms_[j].coeff * c)});
  }
  return p;
}

Poly Poly::without_leading() const {
  Poly p(order_);
  p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  p *= Rat(1) / leading_coeff();
  return p;
}

bool Poly::operator==(const Poly& other) const {
  if (other.order_ != order_) return *this == other.with_order(order_);
  return terms_ == other.terms_;
}

Poly pow(const Poly& p, unsigned n) {
  Poly result(Rat(1), p.order());
  Poly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------

Poly derivative(const Poly& p, Var v) {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const auto e = t.mono.exp[idx];
    if (e == 0) continue;
    Mono m = t.mono;
    m.exp[idx] = e - 1;
    out.push_back(Term{m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms under grlex, so re-sort.
  return Poly::from_terms(std::move(out), p.order());
}

Poly antiderivative(const Poly& p, Var v) {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Mono m = t.mono;
    m.exp[idx] += 1;
    out.push_back(Term{m, t.coeff / Rat(m.exp[idx])});
  }
  return Poly::from_terms(std::move(out), p.order());
}

DivisionResult divide_multivariate(const Poly& p, std::span<const Poly> divisors,
                                   MonomialOrder order) {
  if (divisors.empty()) {
    throw Error(ErrorCode::InvalidArgument, "divide_multivariate: empty divisor list");
  }
  std::vector<Poly> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "divide_multivariate: zero divisor");
    ds.push_back(d.with_order(order));
  }
  DivisionResult result;
  std::vector<std::vector<Term>> quotient_terms(ds.size());
  std::vector<Term> remainder_terms;
  Poly rest = p.with_order(order);
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (!ds[i].leading_mono().divides(lt.mono)) continue;
      const Mono m = lt.mono / ds[i].leading_mono();
      const Rat c = lt.coeff / ds[i].leading_coeff();
      quotient_terms[i].push_back(Term{m, c});
      rest = rest.sub_mul_term(m, c, ds[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back(lt);
      rest = rest.without_leading();
    }
  }
  // Quotient and remainder terms are produced in decreasing order.
  result.quotients.reserve(ds.size());
  for (auto& q : quotient_terms) result.quotients.push_back(Poly::from_terms(std::move(q), order));
  result.remainder = Poly::from_canonical(std::move(remainder_terms), order);
  return result;
}

namespace {

void require_univariate(const Poly& p, Var v, const char* what) {
  for (Var w : kAllVars) {
    if (w != v && p.uses(w)) {
      throw Error(ErrorCode::BadVariables,
                  std::string(what) + ": polynomial is not univariate in " + var_name(v));
    }
  }
}

}  // namespace

UnivariateDivision divide_univariate(const Poly& a, const Poly& b, Var v) {
  require_univariate(a, v, "divide_univariate");
  require_univariate(b, v, "divide_univariate");
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "divide_univariate: zero divisor");
  // For a single variable every monomial order coincides with degree order.
  const Poly divisor[] = {b};
  auto r = divide_multivariate(a, divisor, a.order());
  return UnivariateDivision{std::move(r.quotients.front()), std::move(r.remainder)};
}

Poly gcd_univariate(Poly a, Poly b, Var v) {
  require_univariate(a, v, "gcd_univariate");
  require_univariate(b, v, "gcd_univariate");
  while (!b.is_zero()) {
    Poly r = divide_univariate(a, b, v).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace bw
