#pragma once

// Sparse multivariate polynomials over Q in the variables x, y, z.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bw {

using Rat = mpq_class;

enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::size_t kNumVars = 3;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::X, Var::Y, Var::Z};

char var_name(Var v) noexcept;

/// Exponent vector (e_x, e_y, e_z).
struct Mono {
  std::array<std::uint32_t, kNumVars> exp{};

  constexpr Mono() = default;
  constexpr Mono(std::uint32_t ex, std::uint32_t ey = 0, std::uint32_t ez = 0)
      : exp{ex, ey, ez} {}

  static Mono of(Var v, std::uint32_t power = 1) {
    Mono m;
    m.exp[static_cast<std::size_t>(v)] = power;
    return m;
  }

  std::uint32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  std::uint32_t degree() const { return exp[0] + exp[1] + exp[2]; }
  bool is_one() const { return degree() == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Mono& other) const {
    return exp[0] <= other.exp[0] && exp[1] <= other.exp[1] && exp[2] <= other.exp[2];
  }

  friend Mono operator*(const Mono& a, const Mono& b) {
    return Mono{a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]};
  }
  /// Exact quotient; requires b.divides(a).
  friend Mono operator/(const Mono& a, const Mono& b) {
    return Mono{a.exp[0] - b.exp[0], a.exp[1] - b.exp[1], a.exp[2] - b.exp[2]};
  }

  bool operator==(const Mono&) const = default;
};

Mono lcm(const Mono& a, const Mono& b);
bool coprime(const Mono& a, const Mono& b);

/// Variable precedence is z > y > x for both orders, so x is the variable
/// that survives in lexicographic normal forms.
enum class MonomialOrder { Lex, GrLex };

/// Three-way comparison under `order`: negative if a < b, zero if equal.
int compare(MonomialOrder order, const Mono& a, const Mono& b);

struct Term {
  Mono mono;
  Rat coeff;

  bool operator==(const Term& other) const {
    return mono == other.mono && coeff == other.coeff;
  }
};

/// Immutable-by-convention polynomial value. Terms are kept sorted in
/// strictly decreasing order under the polynomial's monomial order, with no
/// zero coefficients; the zero polynomial has no terms.
class Poly {
 public:
  Poly() = default;
  explicit Poly(MonomialOrder order) : order_(order) {}
  Poly(const Rat& c, MonomialOrder order = MonomialOrder::Lex);  // NOLINT(implicit)
  Poly(long c, MonomialOrder order = MonomialOrder::Lex)          // NOLINT(implicit)
      : Poly(Rat(c), order) {}
  Poly(int c, MonomialOrder order = MonomialOrder::Lex)           // NOLINT(implicit)
      : Poly(Rat(c), order) {}

  static Poly var(Var v, MonomialOrder order = MonomialOrder::Lex);
  static Poly monomial(const Mono& m, const Rat& c, MonomialOrder order = MonomialOrder::Lex);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Poly from_terms(std::vector<Term> terms, MonomialOrder order = MonomialOrder::Lex);
  /// Trusts that `terms` is already canonical for `order`.
  static Poly from_canonical(std::vector<Term> terms, MonomialOrder order);

  MonomialOrder order() const { return order_; }
  Poly with_order(MonomialOrder order) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero counts as constant.
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rat constant_term() const;
  Rat coeff(const Mono& m) const;

  /// Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Mono& leading_mono() const { return terms_.front().mono; }
  const Rat& leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(Var v) const;
  bool uses(Var v) const;
  /// True iff every variable occurring in the polynomial is in `allowed`.
  bool only_uses(std::initializer_list<Var> allowed) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  /// c * m * this.
  Poly mul_term(const Mono& m, const Rat& c) const;
  /// this - c * m * g, computed with a single merge.
  Poly sub_mul_term(const Mono& m, const Rat& c, const Poly& g) const;
  /// Removes the leading term. Precondition: nonzero.
  Poly without_leading() const;
  /// Scales so that the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  /// Structural equality of term lists (after aligning monomial orders).
  bool operator==(const Poly& other) const;

 private:
  MonomialOrder order_ = MonomialOrder::Lex;
  std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned n);

Poly derivative(const Poly& p, Var v);

/// Preimage of `p` under d/dv with no v-free terms.
Poly antiderivative(const Poly& p, Var v);

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division with remainder. Each step reduces the current
/// leading term by the earliest listed divisor whose leading monomial divides
/// it. Throws InvalidArgument on an empty list or a zero divisor.
DivisionResult divide_multivariate(const Poly& p, std::span<const Poly> divisors,
                                   MonomialOrder order);

struct UnivariateDivision {
  Poly quotient;
  Poly remainder;
};

/// Division of polynomials in the single variable v (other variables absent).
UnivariateDivision divide_univariate(const Poly& a, const Poly& b, Var v);

/// Monic gcd of two polynomials in the single variable v; gcd(0, 0) = 0.
Poly gcd_univariate(Poly a, Poly b, Var v);

}  // namespace bw
