#include "bw/decompose.hpp"

#include <string>

#include "bw/error.hpp"

namespace bw {

namespace {

void require_kind(const Curve& curve, CurveKind kind, const char* op) {
  if (!curve || curve->kind() != kind) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(op) + " needs a curve of kind " + std::string(to_string(kind)));
  }
}

void check_length(const BracketDecomp& d, std::size_t bound, const char* op) {
  if (d.length() > bound) {
    throw Error(ErrorCode::CertificateFailure, std::string(op) + " produced " +
                                                   std::to_string(d.length()) +
                                                   " brackets, bound is " + std::to_string(bound));
  }
}

// Cofactors of the lifted target against the (P, Q, R) + I generators.
std::vector<Poly> tau_ideal_cofactors(const CurveModel& curve, const Poly& target,
                                      const char* op) {
  auto cert = membership_certificate(target, curve.tau_ideal());
  if (!cert) {
    throw Error(ErrorCode::CertificateFailure,
                std::string(op) + ": target is not in (P, Q, R) + I");
  }
  return cert->cofactors();
}

}  // namespace

std::size_t length_bound(CurveKind kind) {
  switch (kind) {
    case CurveKind::AffineLine:
    case CurveKind::LocalizedLine: return 1;
    case CurveKind::PlaneCurve: return 2;
    case CurveKind::SpaceCurve: return 3;
  }
  return 0;
}

RghSolution solve_rgh(const Poly& F, const Poly& G, const Poly& H) {
  const Rat half(1, 2);
  Poly r = antiderivative(F, Var::X);
  Poly g = (derivative(r, Var::Y) - G) * half;
  Poly h2 = (derivative(r, Var::Z) - H) * half;
  return RghSolution{std::move(r), std::move(g), std::move(h2)};
}

BracketDecomp assemble_from_cofactors(const Curve& curve, const Poly& F, const Poly& G,
                                      const Poly& H, DecompTrace* trace) {
  if (!curve ||
      (curve->kind() != CurveKind::PlaneCurve && curve->kind() != CurveKind::SpaceCurve)) {
    throw Error(ErrorCode::InvalidArgument, "cofactor assembly needs a plane or space curve");
  }
  const MonomialOrder order = curve->order();
  const bool space = curve->kind() == CurveKind::SpaceCurve;
  // R = 0 on plane curves, so the H slot does not contribute there.
  const Poly h_slot = space ? H : Poly(order);
  RghSolution sol = solve_rgh(F, G, h_slot);
  Poly f = sol.r - Poly::var(Var::Y, order) * sol.g;
  if (space) f -= Poly::var(Var::Z, order) * sol.h2;

  if (trace != nullptr) {
    trace->slot_f = F;
    trace->slot_g = G;
    trace->slot_h = h_slot;
    trace->r = sol.r;
    trace->g = sol.g;
    trace->h2 = sol.h2;
    trace->f = f;
  }

  BracketDecomp d{curve, {}};
  auto emit = [&](const Poly& left, const Poly& right) {
    VField u = VField::from_poly(curve, left);
    VField v = VField::from_poly(curve, right);
    if (!bracket(u, v).is_zero()) d.pairs.emplace_back(std::move(u), std::move(v));
  };
  emit(Poly(Rat(1), order), f);
  emit(Poly::var(Var::Y, order), sol.g);
  if (space) emit(Poly::var(Var::Z, order), sol.h2);
  check_length(d, length_bound(curve->kind()), "cofactor assembly");
  return d;
}

BracketDecomp single_bracket_line(const Curve& line, const RingElem& h, DecompTrace* trace) {
  require_kind(line, CurveKind::AffineLine, "single_bracket_line");
  BracketDecomp d{line, {}};
  Poly primitive = antiderivative(h.repr, Var::X);
  if (trace != nullptr) trace->antiderivative = primitive;
  if (h.repr.is_zero()) return d;
  // [a tau, b tau] = (a b' - a' b) tau, so b = 1 and a = -H give H' = h.
  d.pairs.emplace_back(VField::from_poly(line, -primitive),
                       VField::from_poly(line, Poly(Rat(1), line->order())));
  return d;
}

BracketDecomp two_bracket_plane(const Curve& plane, const RingElem& h, DecompTrace* trace) {
  require_kind(plane, CurveKind::PlaneCurve, "two_bracket_plane");
  if (h.repr.is_zero()) return BracketDecomp{plane, {}};
  auto cofactors = tau_ideal_cofactors(*plane, h.repr, "two_bracket_plane");
  if (trace != nullptr) trace->certificate_cofactors = cofactors;
  // Only P F + Q G modulo I matters, so the slots may be reduced first.
  const Poly F = plane->reduce(cofactors[0]).repr;
  const Poly G = plane->reduce(cofactors[1]).repr;
  auto d = assemble_from_cofactors(plane, F, G, Poly(plane->order()), trace);
  check_length(d, 2, "two_bracket_plane");
  return d;
}

BracketDecomp three_bracket_space(const Curve& space, const RingElem& h, DecompTrace* trace) {
  require_kind(space, CurveKind::SpaceCurve, "three_bracket_space");
  if (h.repr.is_zero()) return BracketDecomp{space, {}};
  auto cofactors = tau_ideal_cofactors(*space, h.repr, "three_bracket_space");
  if (trace != nullptr) trace->certificate_cofactors = cofactors;
  const Poly F = space->reduce(cofactors[0]).repr;
  const Poly G = space->reduce(cofactors[1]).repr;
  const Poly H = space->reduce(cofactors[2]).repr;
  auto d = assemble_from_cofactors(space, F, G, H, trace);
  check_length(d, 3, "three_bracket_space");
  return d;
}

BracketDecomp localize_decomp(const BracketDecomp& d, const Curve& localized, unsigned k) {
  require_kind(d.curve, CurveKind::AffineLine, "localize_decomp (input)");
  require_kind(localized, CurveKind::LocalizedLine, "localize_decomp (output)");
  BracketDecomp out{localized, {}};
  out.pairs.reserve(d.pairs.size());
  for (const auto& [u, v] : d.pairs) {
    out.pairs.emplace_back(VField(localized, localized->localize(u.ring_coeff().repr, k)),
                           VField(localized, localized->localize(v.ring_coeff().repr, k)));
  }
  if (out.length() != d.length()) {
    throw Error(ErrorCode::CertificateFailure, "localize_decomp changed the length");
  }
  return out;
}

BracketDecomp rational_decompose(const Curve& localized, const LocalizedElem& target,
                                 DecompTrace* trace) {
  require_kind(localized, CurveKind::LocalizedLine, "rational_decompose");
  const Poly& f = localized->localizing_poly();
  const LocalizedElem t = normalize(target, f);
  if (t.numerator.is_zero()) return BracketDecomp{localized, {}};
  const unsigned k = (t.exponent + 1) / 2;
  const Poly g = t.numerator * pow(f, 2 * k - t.exponent);
  if (trace != nullptr) {
    trace->line_target = g;
    trace->k = k;
  }
  const Curve line = CurveModel::affine_line(localized->options());
  auto d = localize_decomp(single_bracket_line(line, RingElem{g}, trace), localized, k);
  check_length(d, 1, "rational_decompose");
  return d;
}

BracketDecomp decompose(const VField& target, DecompTrace* trace) {
  const Curve& c = target.curve();
  switch (c->kind()) {
    case CurveKind::AffineLine: return single_bracket_line(c, target.ring_coeff(), trace);
    case CurveKind::LocalizedLine: return rational_decompose(c, target.localized_coeff(), trace);
    case CurveKind::PlaneCurve: return two_bracket_plane(c, target.ring_coeff(), trace);
    case CurveKind::SpaceCurve: return three_bracket_space(c, target.ring_coeff(), trace);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown curve kind");
}

}  // namespace bw
