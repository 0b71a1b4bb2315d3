#pragma once

// Buchberger's algorithm with cofactor tracking, normal forms and explicit
// ideal-membership certificates.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bw/poly.hpp"

namespace bw {

struct BuchbergerOptions {
  /// Upper bound on reduction steps (one step = one leading-term
  /// cancellation). Exceeding it throws Error(ResourceExceeded).
  std::uint64_t max_steps = 1'000'000;
};

/// Reduced Groebner basis together with its representation in terms of the
/// original generators: basis[i] == sum_j cofactors[i][j] * generators[j].
struct GroebnerBasis {
  std::vector<Poly> generators;
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofactors;
  MonomialOrder order = MonomialOrder::Lex;

  bool is_unit_ideal() const { return basis.size() == 1 && basis.front().is_constant(); }
  bool is_zero_ideal() const { return basis.empty(); }

  bool operator==(const GroebnerBasis&) const = default;
};

/// Reduced Groebner basis of the ideal generated by `generators`. Zero
/// generators contribute nothing; an empty or all-zero list gives (0).
/// Pairs are processed smallest-lcm first and pairs with coprime leading
/// monomials are skipped. The basis is sorted by increasing leading monomial.
GroebnerBasis buchberger(std::span<const Poly> generators, MonomialOrder order,
                         const BuchbergerOptions& options = {});

/// Unique remainder of `p` modulo the ideal of `gb`.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Explicit witness target == sum_j cofactors[j] * generators[j]. The
/// identity is checked on construction; a failing check throws
/// Error(CertificateFailure), so every live certificate is sound.
class MembershipCertificate {
 public:
  MembershipCertificate(Poly target, std::vector<Poly> generators, std::vector<Poly> cofactors);

  const Poly& target() const { return target_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<Poly>& cofactors() const { return cofactors_; }

  /// Recomputes sum_j cofactors[j] * generators[j] and compares with target.
  bool verify() const;

 private:
  Poly target_;
  std::vector<Poly> generators_;
  std::vector<Poly> cofactors_;
};

/// Certificate for target in (gb.generators), or nullopt when the normal form
/// of target is nonzero.
std::optional<MembershipCertificate> membership_certificate(const Poly& target,
                                                            const GroebnerBasis& gb);

std::optional<MembershipCertificate> membership_certificate(
    const Poly& target, std::span<const Poly> generators, MonomialOrder order,
    const BuchbergerOptions& options = {});

/// Tangent-field lift (P, Q, R) acting as P d/dx + Q d/dy + R d/dz.
struct TauLift {
  Poly p;
  Poly q;
  Poly r;

  /// P g_x + Q g_y + R g_z.
  Poly apply(const Poly& g) const;
  bool is_zero() const { return p.is_zero() && q.is_zero() && r.is_zero(); }
};

/// True iff the derivation maps every generator into the ideal they span.
bool preserves_ideal(const TauLift& tau, std::span<const Poly> generators,
                     MonomialOrder order = MonomialOrder::Lex,
                     const BuchbergerOptions& options = {});
bool preserves_ideal(const TauLift& tau, const GroebnerBasis& gb);

/// Jacobian criterion: for F in x, y the curve V(F) is smooth iff
/// 1 in (F, F_x, F_y). Returns the certificate over [F, F_x, F_y] when it
/// is. Throws InvalidArgument for constant F and BadVariables if z occurs.
std::optional<MembershipCertificate> smooth_plane_certificate(
    const Poly& f, MonomialOrder order = MonomialOrder::Lex,
    const BuchbergerOptions& options = {});

inline bool is_smooth_plane(const Poly& f, MonomialOrder order = MonomialOrder::Lex,
                            const BuchbergerOptions& options = {}) {
  return smooth_plane_certificate(f, order, options).has_value();
}

}  // namespace bw
