#pragma once

// Constructive bracket decompositions with verified length bounds:
//   line           h tau = [-H tau, tau] with H' = h                (1 bracket)
//   plane curve    [tau, f tau] + [y tau, g tau]                     (<= 2)
//   space curve    [tau, f tau] + [y tau, g tau] + [z tau, h tau]    (<= 3)
//   localization   [a/f^k tau, b/f^k tau] = (1/f^2k) [a tau, b tau] (same length)

#include <optional>
#include <vector>

#include "bw/liealg.hpp"

namespace bw {

/// Intermediates recorded by the decomposition routines.
struct DecompTrace {
  /// Cofactors of the lifted target against the generators of (P, Q, R) + I,
  /// in generator order.
  std::vector<Poly> certificate_cofactors;
  /// The slots F, G, H fed to solve_rgh (after reduction modulo I).
  std::optional<Poly> slot_f, slot_g, slot_h;
  std::optional<Poly> r, g, h2, f;
  /// Line antiderivative H with H' = h.
  std::optional<Poly> antiderivative;
  /// Localization: target numerator g, exponent k with target = g / f^(2k).
  std::optional<Poly> line_target;
  std::optional<unsigned> k;
};

struct RghSolution {
  Poly r;
  Poly g;
  Poly h2;
};

/// r, g, h2 with F = r_x, G = r_y - 2 g, H = r_z - 2 h2, r = antiderivative(F, x).
RghSolution solve_rgh(const Poly& F, const Poly& G, const Poly& H);

/// Builds [tau, f tau] + [y tau, g tau] (+ [z tau, h2 tau] on space curves)
/// whose sum is (P F + Q G + R H) tau on `curve`. Pairs with zero bracket
/// are dropped. Any cofactor triple works, which is what makes certificate
/// non-uniqueness harmless.
BracketDecomp assemble_from_cofactors(const Curve& curve, const Poly& F, const Poly& G,
                                      const Poly& H, DecompTrace* trace = nullptr);

/// Length <= 1 on the affine line. Throws InvalidArgument for other curves.
BracketDecomp single_bracket_line(const Curve& line, const RingElem& h,
                                  DecompTrace* trace = nullptr);

/// Length <= 2 on a smooth plane curve.
BracketDecomp two_bracket_plane(const Curve& plane, const RingElem& h,
                                DecompTrace* trace = nullptr);

/// Length <= 3 on a space curve with a unit certificate.
BracketDecomp three_bracket_space(const Curve& space, const RingElem& h,
                                  DecompTrace* trace = nullptr);

/// Divides every coefficient of a line decomposition of g tau by f^k. The
/// result lives on `localized` (whose f is used) and sums to (g / f^(2k)) tau.
BracketDecomp localize_decomp(const BracketDecomp& d, const Curve& localized, unsigned k);

/// Length <= 1 on the localized line: target = g / f^(2k) with the least
/// k such that 2k >= exponent, then a line decomposition of g, localized.
BracketDecomp rational_decompose(const Curve& localized, const LocalizedElem& target,
                                 DecompTrace* trace = nullptr);

/// Dispatches on the curve kind of `target`.
BracketDecomp decompose(const VField& target, DecompTrace* trace = nullptr);

/// The bound each routine guarantees on `kind`.
std::size_t length_bound(CurveKind kind);

}  // namespace bw
