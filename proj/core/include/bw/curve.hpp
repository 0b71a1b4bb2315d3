#pragma once

// Affine curves with trivial tangent sheaf, their coordinate rings as
// Groebner normal forms, and the localized line k[x][1/f].

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bw/groebner.hpp"
#include "bw/poly.hpp"
#include "bw/text.hpp"

namespace bw {

/// Element of the coordinate ring, held as its normal form modulo the curve
/// ideal. Equality is equality of normal forms.
struct RingElem {
  Poly repr;

  bool operator==(const RingElem& other) const { return repr == other.repr; }
};

/// numerator / f^exponent on the localized line. Normalized means
/// exponent == 0 or f does not divide numerator.
struct LocalizedElem {
  Poly numerator;
  unsigned exponent = 0;

  bool operator==(const LocalizedElem& other) const {
    return exponent == other.exponent && numerator == other.numerator;
  }
};

enum class CurveKind { AffineLine, LocalizedLine, PlaneCurve, SpaceCurve };

std::string_view to_string(CurveKind kind) noexcept;

struct AffineLine {};

struct LocalizedLine {
  Poly f;
  bool squarefree = true;
};

struct PlaneCurve {
  Poly equation;
  /// Certificate for 1 in (F, F_x, F_y).
  MembershipCertificate smooth_certificate;
};

struct SpaceCurve {
  std::vector<Poly> generators;
  /// Certificate for 1 in (P, Q, R) + I.
  MembershipCertificate unit_certificate;
};

class CurveModel;
using Curve = std::shared_ptr<const CurveModel>;

struct CurveOptions {
  MonomialOrder order = MonomialOrder::Lex;
  BuchbergerOptions buchberger;
};

/// One of the four supported curve models. Instances are immutable and are
/// only handed out through shared `Curve` handles; vector fields refer to
/// their curve by handle identity.
class CurveModel {
 public:
  using Model = std::variant<AffineLine, LocalizedLine, PlaneCurve, SpaceCurve>;

  static Curve affine_line(const CurveOptions& options = {});

  /// Principal open subset x with f(x) != 0 of the line. f must be a
  /// nonconstant polynomial in x. A non-squarefree f is accepted.
  static Curve localized_line(const Poly& f, const CurveOptions& options = {});

  /// V(F) in the plane with the Hamiltonian field tau = F_y d/dx - F_x d/dy.
  /// Throws NotSmooth when 1 is not in (F, F_x, F_y), BadVariables if z occurs,
  /// InvalidArgument for constant F.
  static Curve plane(const Poly& equation, const CurveOptions& options = {});

  /// V(I) in 3-space with a user-supplied tangent field. Checks, in order:
  /// ZeroTau (tau vanishes on the curve), DoesNotPreserveIdeal,
  /// UnitCertificateAbsent (1 not in (P, Q, R) + I).
  static Curve space(const std::vector<Poly>& generators, const TauLift& tau,
                     const CurveOptions& options = {});

  CurveKind kind() const;
  const Model& model() const { return model_; }
  MonomialOrder order() const { return options_.order; }
  const CurveOptions& options() const { return options_; }

  /// Lift of tau as a derivation of k[x,y,z]; d/dx on both lines.
  const TauLift& tau() const { return tau_; }

  /// Groebner basis of the curve ideal I ((0) on both lines).
  const GroebnerBasis& ideal() const { return ideal_; }

  /// Groebner basis of (P, Q, R) + I, generators listed as P, Q, [R,] then
  /// the ideal generators. Only for plane and space curves.
  const GroebnerBasis& tau_ideal() const;

  /// Localizing polynomial f; only for LocalizedLine.
  const Poly& localizing_poly() const;

  /// Canonical text form in the curve description grammar.
  std::string describe() const;

  /// Normal form of p (coordinate-ring projection). Throws BadVariables when p
  /// uses a variable foreign to the curve. On LocalizedLine this is the
  /// inclusion of k[x], i.e. exponent 0.
  RingElem reduce(const Poly& p) const;

  RingElem mul(const RingElem& a, const RingElem& b) const;

  /// Builds numerator / f^exponent in normalized form. LocalizedLine only.
  LocalizedElem localize(const Poly& numerator, unsigned exponent) const;

  /// Parses a coefficient text. On LocalizedLine denominators must divide a
  /// power of f; elsewhere denominators must be constant.
  std::variant<RingElem, LocalizedElem> parse_element(std::string_view text) const;

  std::string to_string(const RingElem& e) const { return bw::to_string(e.repr); }
  std::string to_string(const LocalizedElem& e) const;

 private:
  CurveModel(Model model, CurveOptions options) : model_(std::move(model)), options_(options) {}

  Model model_;
  CurveOptions options_;
  TauLift tau_;
  GroebnerBasis ideal_;
  GroebnerBasis tau_ideal_;
};

/// Parses `line` | `line minus <f>` | `plane <F>` |
/// `space <g1>; <g2> [; ...] tau <P>, <Q>, <R>`.
Curve parse_curve(std::string_view text, const CurveOptions& options = {});

// Arithmetic in k[x][1/f]. Results are normalized.
LocalizedElem normalize(LocalizedElem e, const Poly& f);
LocalizedElem localized_add(const LocalizedElem& a, const LocalizedElem& b, const Poly& f);
LocalizedElem localized_sub(const LocalizedElem& a, const LocalizedElem& b, const Poly& f);
LocalizedElem localized_mul(const LocalizedElem& a, const LocalizedElem& b, const Poly& f);
LocalizedElem localized_scale(const LocalizedElem& a, const Rat& c);
/// Equality of the represented values (cross-multiplication), independent
/// of normalization.
bool same_value(const LocalizedElem& a, const LocalizedElem& b, const Poly& f);

}  // namespace bw
