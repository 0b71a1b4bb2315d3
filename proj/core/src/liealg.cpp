#include "bw/liealg.hpp"

#include "bw/error.hpp"

namespace bw {

namespace {

void require_curve(const Curve& curve) {
  if (!curve) throw Error(ErrorCode::InvalidArgument, "vector field without a curve");
}

void require_same_curve(const VField& a, const VField& b) {
  if (a.curve() != b.curve()) {
    throw Error(ErrorCode::CurveMismatch, "vector fields live on different curves");
  }
}

bool localized(const CurveModel& c) { return c.kind() == CurveKind::LocalizedLine; }

}  // namespace

VField::VField(Curve curve, Coeff coeff) : curve_(std::move(curve)), coeff_(std::move(coeff)) {
  require_curve(curve_);
  if (localized(*curve_) != std::holds_alternative<LocalizedElem>(coeff_)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient type does not match the curve");
  }
}

VField VField::zero(const Curve& curve) {
  require_curve(curve);
  if (localized(*curve)) return VField(curve, curve->localize(Poly(curve->order()), 0));
  return VField(curve, RingElem{Poly(curve->order())});
}

VField VField::from_poly(const Curve& curve, const Poly& p) {
  require_curve(curve);
  if (localized(*curve)) return VField(curve, curve->localize(p, 0));
  return VField(curve, curve->reduce(p));
}

VField VField::parse(const Curve& curve, std::string_view text) {
  require_curve(curve);
  return std::visit([&](auto&& e) { return VField(curve, Coeff(e)); },
                    curve->parse_element(text));
}

const RingElem& VField::ring_coeff() const {
  if (const auto* e = std::get_if<RingElem>(&coeff_)) return *e;
  throw Error(ErrorCode::InvalidArgument, "field lives on a localized line");
}

const LocalizedElem& VField::localized_coeff() const {
  if (const auto* e = std::get_if<LocalizedElem>(&coeff_)) return *e;
  throw Error(ErrorCode::InvalidArgument, "field does not live on a localized line");
}

bool VField::is_zero() const {
  return std::visit(
      [](const auto& e) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, RingElem>) {
          return e.repr.is_zero();
        } else {
          return e.numerator.is_zero();
        }
      },
      coeff_);
}

std::string VField::to_string() const {
  return std::visit([this](const auto& e) { return curve_->to_string(e); }, coeff_);
}

VField operator+(const VField& a, const VField& b) {
  require_same_curve(a, b);
  if (localized(*a.curve())) {
    return VField(a.curve(), localized_add(a.localized_coeff(), b.localized_coeff(),
                                           a.curve()->localizing_poly()));
  }
  // Normal forms are linear, so the sum of two is again one.
  return VField(a.curve(), RingElem{a.ring_coeff().repr + b.ring_coeff().repr});
}

VField operator-(const VField& a, const VField& b) { return a + Rat(-1) * b; }

VField operator*(const Rat& c, const VField& v) {
  if (localized(*v.curve())) return VField(v.curve(), localized_scale(v.localized_coeff(), c));
  return VField(v.curve(), RingElem{v.ring_coeff().repr * c});
}

bool VField::operator==(const VField& other) const {
  return curve_ == other.curve_ && coeff_ == other.coeff_;
}

// ---------------------------------------------------------------------------

RingElem apply_tau(const CurveModel& curve, const RingElem& b) {
  if (localized(curve)) return RingElem{derivative(b.repr, Var::X)};
  return curve.reduce(curve.tau().apply(b.repr));
}

LocalizedElem apply_tau(const CurveModel& curve, const LocalizedElem& b) {
  const Poly& f = curve.localizing_poly();
  const Poly dp = derivative(b.numerator, Var::X);
  if (b.exponent == 0) return LocalizedElem{dp, 0};
  // (p / f^m)' = (p' f - m p f') / f^(m+1)
  Poly num = dp * f - b.numerator * derivative(f, Var::X) * Rat(b.exponent);
  return normalize(LocalizedElem{std::move(num), b.exponent + 1}, f);
}

VField bracket(const VField& u, const VField& v) {
  require_same_curve(u, v);
  const CurveModel& c = *u.curve();
  if (localized(c)) {
    const Poly& f = c.localizing_poly();
    const auto& a = u.localized_coeff();
    const auto& b = v.localized_coeff();
    return VField(u.curve(), localized_sub(localized_mul(a, apply_tau(c, b), f),
                                           localized_mul(b, apply_tau(c, a), f), f));
  }
  const auto& a = u.ring_coeff();
  const auto& b = v.ring_coeff();
  // Reduce once at the end: the combination is linear in the lifts.
  Poly lift = a.repr * apply_tau(c, b).repr - b.repr * apply_tau(c, a).repr;
  return VField(u.curve(), c.reduce(lift));
}

VField recombine(const BracketDecomp& d) {
  VField sum = VField::zero(d.curve);
  for (const auto& [u, v] : d.pairs) {
    if (u.curve() != d.curve || v.curve() != d.curve) {
      throw Error(ErrorCode::CurveMismatch, "decomposition mixes curves");
    }
    sum = sum + bracket(u, v);
  }
  return sum;
}

}  // namespace bw
