#pragma once

// The Lie algebra Vec(C) = O(C) * tau of a curve with trivial tangent sheaf.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bw/curve.hpp"

namespace bw {

using Coeff = std::variant<RingElem, LocalizedElem>;

/// coeff * tau on `curve`. LocalizedLine fields carry a LocalizedElem, every
/// other curve a RingElem; the coefficient is always in canonical form.
class VField {
 public:
  VField(Curve curve, Coeff coeff);

  static VField zero(const Curve& curve);
  /// Projects p into the coordinate ring first.
  static VField from_poly(const Curve& curve, const Poly& p);
  static VField parse(const Curve& curve, std::string_view text);

  const Curve& curve() const { return curve_; }
  const Coeff& coeff() const { return coeff_; }
  /// Coefficient as a ring element; throws InvalidArgument on LocalizedLine.
  const RingElem& ring_coeff() const;
  const LocalizedElem& localized_coeff() const;

  bool is_zero() const;
  std::string to_string() const;

  friend VField operator+(const VField& a, const VField& b);
  friend VField operator-(const VField& a, const VField& b);
  friend VField operator*(const Rat& c, const VField& v);

  /// Same curve handle and identical canonical coefficient.
  bool operator==(const VField& other) const;

 private:
  Curve curve_;
  Coeff coeff_;
};

/// tau(b), computed on a polynomial lift and projected back.
RingElem apply_tau(const CurveModel& curve, const RingElem& b);
/// d/dx on k[x][1/f] by the quotient rule.
LocalizedElem apply_tau(const CurveModel& curve, const LocalizedElem& b);

/// [a tau, b tau] = (a tau(b) - b tau(a)) tau. Throws CurveMismatch.
VField bracket(const VField& u, const VField& v);

/// Ordered pairs (u_i, v_i) standing for sum_i [u_i, v_i].
struct BracketDecomp {
  Curve curve;
  std::vector<std::pair<VField, VField>> pairs;

  std::size_t length() const { return pairs.size(); }
};

/// Evaluates sum_i [u_i, v_i]; the empty sum is the zero field.
VField recombine(const BracketDecomp& d);

}  // namespace bw
