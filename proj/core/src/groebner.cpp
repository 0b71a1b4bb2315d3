#include "bw/groebner.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bw/error.hpp"

namespace bw {

namespace {

class StepBudget {
 public:
  explicit StepBudget(std::uint64_t max_steps) : max_(max_steps) {}

  void tick() {
    if (++used_ > max_) {
      throw Error(ErrorCode::ResourceExceeded,
                  "Groebner step budget of " + std::to_string(max_) + " reduction steps exceeded");
    }
  }

 private:
  std::uint64_t max_;
  std::uint64_t used_ = 0;
};

// A polynomial together with its representation sum_j cof[j] * generators[j].
struct Tracked {
  Poly poly;
  std::vector<Poly> cof;
};

// Fully reduces t modulo `basis` (skipping index `skip`), carrying the
// cofactor vector through every cancellation. Earliest divisor wins.
void reduce_tracked(Tracked& t, const std::vector<Tracked>& basis, StepBudget& budget,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
  const MonomialOrder order = t.poly.order();
  std::vector<Term> remainder;
  Poly rest = std::move(t.poly);
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip) continue;
      const Poly& g = basis[i].poly;
      if (!g.leading_mono().divides(lt.mono)) continue;
      budget.tick();
      const Mono m = lt.mono / g.leading_mono();
      const Rat c = lt.coeff / g.leading_coeff();
      rest = rest.sub_mul_term(m, c, g);
      for (std::size_t j = 0; j < t.cof.size(); ++j) {
        if (!basis[i].cof[j].is_zero()) t.cof[j] = t.cof[j].sub_mul_term(m, c, basis[i].cof[j]);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      rest = rest.without_leading();
    }
  }
  t.poly = Poly::from_canonical(std::move(remainder), order);
}

// Reduction that records quotients instead of cofactors.
Poly reduce_with_quotients(const Poly& p, const std::vector<Poly>& basis,
                           std::vector<std::vector<Term>>* quotients) {
  const MonomialOrder order = basis.empty() ? p.order() : basis.front().order();
  std::vector<Term> remainder;
  Poly rest = p.with_order(order);
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Poly& g = basis[i];
      if (!g.leading_mono().divides(lt.mono)) continue;
      const Mono m = lt.mono / g.leading_mono();
      const Rat c = lt.coeff / g.leading_coeff();
      if (quotients != nullptr) (*quotients)[i].push_back(Term{m, c});
      rest = rest.sub_mul_term(m, c, g);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      rest = rest.without_leading();
    }
  }
  return Poly::from_canonical(std::move(remainder), order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Mono lcm;
};

Tracked s_polynomial(const Tracked& a, const Tracked& b, const Mono& l) {
  const Mono ma = l / a.poly.leading_mono();
  const Mono mb = l / b.poly.leading_mono();
  const Rat ca = Rat(1) / a.poly.leading_coeff();
  const Rat cb = Rat(1) / b.poly.leading_coeff();
  Tracked s;
  s.poly = a.poly.mul_term(ma, ca).sub_mul_term(mb, cb, b.poly);
  s.cof.reserve(a.cof.size());
  for (std::size_t k = 0; k < a.cof.size(); ++k) {
    s.cof.push_back(a.cof[k].mul_term(ma, ca).sub_mul_term(mb, cb, b.cof[k]));
  }
  return s;
}

Tracked make_monic(Tracked t) {
  const Rat inv = Rat(1) / t.poly.leading_coeff();
  t.poly *= inv;
  for (auto& c : t.cof) c *= inv;
  return t;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Poly> generators, MonomialOrder order,
                         const BuchbergerOptions& options) {
  GroebnerBasis gb;
  gb.order = order;
  gb.generators.reserve(generators.size());
  for (const auto& g : generators) gb.generators.push_back(g.with_order(order));
  const std::size_t n = gb.generators.size();

  StepBudget budget(options.max_steps);
  std::vector<Tracked> work;
  std::vector<Pair> pairs;
  bool unit = false;

  auto add = [&](Tracked t) {
    if (t.poly.is_constant()) {
      // A nonzero constant generates everything; nothing else is needed.
      work.clear();
      pairs.clear();
      work.push_back(std::move(t));
      unit = true;
      return;
    }
    const std::size_t k = work.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Mono& a = work[i].poly.leading_mono();
      const Mono& b = t.poly.leading_mono();
      if (coprime(a, b)) continue;
      pairs.push_back(Pair{i, k, lcm(a, b)});
    }
    work.push_back(std::move(t));
  };

  for (std::size_t j = 0; j < n && !unit; ++j) {
    if (gb.generators[j].is_zero()) continue;
    Tracked t;
    t.poly = gb.generators[j];
    t.cof.assign(n, Poly(order));
    t.cof[j] = Poly(Rat(1), order);
    reduce_tracked(t, work, budget);
    if (!t.poly.is_zero()) add(std::move(t));
  }

  while (!pairs.empty() && !unit) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      const int c = compare(order, it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::pair(it->j, it->i) < std::pair(best->j, best->i))) best = it;
    }
    const Pair pair = *best;
    pairs.erase(best);
    Tracked s = s_polynomial(work[pair.i], work[pair.j], pair.lcm);
    reduce_tracked(s, work, budget);
    if (!s.poly.is_zero()) add(std::move(s));
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Mono& lm = work[i].poly.leading_mono();
    bool redundant = false;
    for (std::size_t j = 0; j < work.size() && !redundant; ++j) {
      if (j == i) continue;
      const Mono& other = work[j].poly.leading_mono();
      if (other.divides(lm) && (other != lm || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(work[i]);
  }

  // Tail-reduce each element by the others; leading monomials are unaffected.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Tracked head;
    head.poly = Poly::monomial(minimal[i].poly.leading_mono(), minimal[i].poly.leading_coeff(),
                               order);
    Tracked tail{minimal[i].poly - head.poly, minimal[i].cof};
    reduce_tracked(tail, minimal, budget, i);
    minimal[i].poly = head.poly + tail.poly;
    minimal[i].cof = std::move(tail.cof);
    minimal[i] = make_monic(std::move(minimal[i]));
  }

  std::sort(minimal.begin(), minimal.end(), [order](const Tracked& a, const Tracked& b) {
    return compare(order, a.poly.leading_mono(), b.poly.leading_mono()) < 0;
  });
  for (auto& t : minimal) {
    gb.basis.push_back(std::move(t.poly));
    gb.cofactors.push_back(std::move(t.cof));
  }
  return gb;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (gb.basis.empty()) return p.with_order(gb.order);
  return reduce_with_quotients(p, gb.basis, nullptr);
}

// ---------------------------------------------------------------------------

MembershipCertificate::MembershipCertificate(Poly target, std::vector<Poly> generators,
                                             std::vector<Poly> cofactors)
    : target_(std::move(target)),
      generators_(std::move(generators)),
      cofactors_(std::move(cofactors)) {
  if (generators_.size() != cofactors_.size()) {
    throw Error(ErrorCode::CertificateFailure,
                "membership certificate: cofactor count does not match generator count");
  }
  if (!verify()) {
    throw Error(ErrorCode::CertificateFailure,
                "membership certificate: cofactor combination does not equal the target");
  }
}

bool MembershipCertificate::verify() const {
  Poly sum(target_.order());
  for (std::size_t j = 0; j < generators_.size(); ++j) sum += cofactors_[j] * generators_[j];
  return sum == target_;
}

std::optional<MembershipCertificate> membership_certificate(const Poly& target,
                                                            const GroebnerBasis& gb) {
  const Poly t = target.with_order(gb.order);
  std::vector<Poly> cofactors(gb.generators.size(), Poly(gb.order));
  if (gb.basis.empty()) {
    if (!t.is_zero()) return std::nullopt;
    return MembershipCertificate(t, gb.generators, std::move(cofactors));
  }
  std::vector<std::vector<Term>> quotient_terms(gb.basis.size());
  if (!reduce_with_quotients(t, gb.basis, &quotient_terms).is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (quotient_terms[i].empty()) continue;
    const Poly q = Poly::from_terms(std::move(quotient_terms[i]), gb.order);
    for (std::size_t j = 0; j < cofactors.size(); ++j) {
      if (!gb.cofactors[i][j].is_zero()) cofactors[j] += q * gb.cofactors[i][j];
    }
  }
  return MembershipCertificate(t, gb.generators, std::move(cofactors));
}

std::optional<MembershipCertificate> membership_certificate(const Poly& target,
                                                            std::span<const Poly> generators,
                                                            MonomialOrder order,
                                                            const BuchbergerOptions& options) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidArgument, "membership_certificate: empty generator list");
  }
  return membership_certificate(target, buchberger(generators, order, options));
}

// ---------------------------------------------------------------------------

Poly TauLift::apply(const Poly& g) const {
  Poly out = p * derivative(g, Var::X);
  out += q * derivative(g, Var::Y);
  out += r * derivative(g, Var::Z);
  return out;
}

bool preserves_ideal(const TauLift& tau, const GroebnerBasis& gb) {
  for (const auto& g : gb.generators) {
    if (!normal_form(tau.apply(g), gb).is_zero()) return false;
  }
  return true;
}

bool preserves_ideal(const TauLift& tau, std::span<const Poly> generators, MonomialOrder order,
                     const BuchbergerOptions& options) {
  return preserves_ideal(tau, buchberger(generators, order, options));
}

std::optional<MembershipCertificate> smooth_plane_certificate(const Poly& f, MonomialOrder order,
                                                              const BuchbergerOptions& options) {
  if (f.is_constant()) {
    throw Error(ErrorCode::InvalidArgument, "plane curve equation must be nonconstant");
  }
  if (!f.only_uses({Var::X, Var::Y})) {
    throw Error(ErrorCode::BadVariables, "plane curve equation may only use x and y");
  }
  const Poly gens[] = {f, derivative(f, Var::X), derivative(f, Var::Y)};
  return membership_certificate(Poly(Rat(1), order), gens, order, options);
}

}  // namespace bw
