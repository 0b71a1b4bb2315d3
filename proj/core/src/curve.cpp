#include "bw/curve.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "bw/error.hpp"
#include "bw/text.hpp"

namespace bw {

std::string_view to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::AffineLine: return "line";
    case CurveKind::LocalizedLine: return "localized-line";
    case CurveKind::PlaneCurve: return "plane";
    case CurveKind::SpaceCurve: return "space";
  }
  return "unknown";
}

namespace {

void require_x_only(const Poly& p, const char* what) {
  if (!p.only_uses({Var::X})) {
    throw Error(ErrorCode::BadVariables, std::string(what) + " may only use x");
  }
}

Curve share(CurveModel* raw) { return Curve(raw); }

}  // namespace

Curve CurveModel::affine_line(const CurveOptions& options) {
  auto* c = new CurveModel(AffineLine{}, options);
  c->tau_ = TauLift{Poly(Rat(1), options.order), Poly(options.order), Poly(options.order)};
  c->ideal_.order = options.order;
  return share(c);
}

Curve CurveModel::localized_line(const Poly& f, const CurveOptions& options) {
  if (f.is_constant()) {
    throw Error(ErrorCode::InvalidArgument, "localizing polynomial must be nonconstant");
  }
  require_x_only(f, "localizing polynomial");
  const Poly fo = f.with_order(options.order);
  const bool squarefree = gcd_univariate(fo, derivative(fo, Var::X), Var::X).is_constant();
  auto* c = new CurveModel(LocalizedLine{fo, squarefree}, options);
  c->tau_ = TauLift{Poly(Rat(1), options.order), Poly(options.order), Poly(options.order)};
  c->ideal_.order = options.order;
  return share(c);
}

Curve CurveModel::plane(const Poly& equation, const CurveOptions& options) {
  const Poly f = equation.with_order(options.order);
  auto cert = smooth_plane_certificate(f, options.order, options.buchberger);
  if (!cert) {
    throw Error(ErrorCode::NotSmooth,
                "curve " + bw::to_string(f) + " = 0 is singular: 1 is not in (F, F_x, F_y)");
  }
  auto* c = new CurveModel(PlaneCurve{f, std::move(*cert)}, options);
  Curve handle = share(c);
  c->tau_ = TauLift{derivative(f, Var::Y), -derivative(f, Var::X), Poly(options.order)};
  const Poly ideal_gens[] = {f};
  c->ideal_ = buchberger(ideal_gens, options.order, options.buchberger);
  const Poly tau_gens[] = {c->tau_.p, c->tau_.q, f};
  c->tau_ideal_ = buchberger(tau_gens, options.order, options.buchberger);
  return handle;
}

Curve CurveModel::space(const std::vector<Poly>& generators, const TauLift& tau,
                        const CurveOptions& options) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidArgument, "space curve needs at least one generator");
  }
  const MonomialOrder order = options.order;
  std::vector<Poly> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.with_order(order));
  const TauLift t{tau.p.with_order(order), tau.q.with_order(order), tau.r.with_order(order)};

  GroebnerBasis ideal = buchberger(gens, order, options.buchberger);
  if (ideal.is_unit_ideal()) {
    throw Error(ErrorCode::InvalidArgument, "space curve ideal is the unit ideal (empty curve)");
  }
  if (normal_form(t.p, ideal).is_zero() && normal_form(t.q, ideal).is_zero() &&
      normal_form(t.r, ideal).is_zero()) {
    throw Error(ErrorCode::ZeroTau, "tangent field vanishes identically on the curve");
  }
  if (!preserves_ideal(t, ideal)) {
    throw Error(ErrorCode::DoesNotPreserveIdeal, "tangent field does not preserve the curve ideal");
  }
  std::vector<Poly> tau_gens{t.p, t.q, t.r};
  tau_gens.insert(tau_gens.end(), gens.begin(), gens.end());
  GroebnerBasis tau_ideal = buchberger(tau_gens, order, options.buchberger);
  auto cert = membership_certificate(Poly(Rat(1), order), tau_ideal);
  if (!cert) {
    throw Error(ErrorCode::UnitCertificateAbsent,
                "1 is not in (P, Q, R) + I: the tangent field has zeros on the curve");
  }
  auto* c = new CurveModel(SpaceCurve{gens, std::move(*cert)}, options);
  Curve handle = share(c);
  c->tau_ = t;
  c->ideal_ = std::move(ideal);
  c->tau_ideal_ = std::move(tau_ideal);
  return handle;
}

CurveKind CurveModel::kind() const { return static_cast<CurveKind>(model_.index()); }

const GroebnerBasis& CurveModel::tau_ideal() const {
  if (kind() != CurveKind::PlaneCurve && kind() != CurveKind::SpaceCurve) {
    throw Error(ErrorCode::InvalidArgument, "tau ideal exists only for plane and space curves");
  }
  return tau_ideal_;
}

const Poly& CurveModel::localizing_poly() const {
  if (const auto* l = std::get_if<LocalizedLine>(&model_)) return l->f;
  throw Error(ErrorCode::InvalidArgument, "curve is not a localized line");
}

std::string CurveModel::describe() const {
  switch (kind()) {
    case CurveKind::AffineLine: return "line";
    case CurveKind::LocalizedLine: return "line minus " + bw::to_string(localizing_poly());
    case CurveKind::PlaneCurve:
      return "plane " + bw::to_string(std::get<PlaneCurve>(model_).equation);
    case CurveKind::SpaceCurve: {
      const auto& s = std::get<SpaceCurve>(model_);
      std::string out = "space ";
      for (std::size_t i = 0; i < s.generators.size(); ++i) {
        if (i > 0) out += "; ";
        out += bw::to_string(s.generators[i]);
      }
      out += " tau " + bw::to_string(tau_.p) + ", " + bw::to_string(tau_.q) + ", " +
             bw::to_string(tau_.r);
      return out;
    }
  }
  return {};
}

RingElem CurveModel::reduce(const Poly& p) const {
  switch (kind()) {
    case CurveKind::AffineLine:
    case CurveKind::LocalizedLine:
      require_x_only(p, "line element");
      return RingElem{p.with_order(order())};
    case CurveKind::PlaneCurve:
      if (!p.only_uses({Var::X, Var::Y})) {
        throw Error(ErrorCode::BadVariables, "plane curve element may only use x and y");
      }
      return RingElem{normal_form(p, ideal_)};
    case CurveKind::SpaceCurve: return RingElem{normal_form(p, ideal_)};
  }
  return {};
}

RingElem CurveModel::mul(const RingElem& a, const RingElem& b) const {
  return reduce(a.repr * b.repr);
}

LocalizedElem CurveModel::localize(const Poly& numerator, unsigned exponent) const {
  require_x_only(numerator, "localized numerator");
  return normalize(LocalizedElem{numerator.with_order(order()), exponent}, localizing_poly());
}

std::variant<RingElem, LocalizedElem> CurveModel::parse_element(std::string_view text) const {
  Fraction frac = parse_fraction(text);
  if (kind() != CurveKind::LocalizedLine) {
    if (!frac.denominator.is_constant()) {
      throw Error(ErrorCode::ParseError,
                  "non-constant denominator in '" + std::string(text) + "' on this curve");
    }
    return reduce(frac.numerator * (Rat(1) / frac.denominator.constant_term()));
  }
  require_x_only(frac.numerator, "localized element");
  require_x_only(frac.denominator, "localized element");
  const Poly& f = localizing_poly();
  // num/den = (num * f^m / den) / f^m; m <= deg(den) suffices when every root
  // of den is a root of f.
  Poly scaled = frac.numerator;
  const unsigned bound = frac.denominator.degree_in(Var::X);
  for (unsigned m = 0; m <= bound; ++m) {
    auto div = divide_univariate(scaled, frac.denominator, Var::X);
    if (div.remainder.is_zero()) return localize(div.quotient, m);
    scaled *= f;
  }
  throw Error(ErrorCode::InvalidArgument, "denominator of '" + std::string(text) +
                                              "' does not divide a power of " + bw::to_string(f));
}

std::string CurveModel::to_string(const LocalizedElem& e) const {
  if (e.exponent == 0) return bw::to_string(e.numerator);
  std::string out = "(" + bw::to_string(e.numerator) + ")/(" + bw::to_string(localizing_poly()) + ")";
  if (e.exponent > 1) out += "^" + std::to_string(e.exponent);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool consume_word(std::string_view& s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  if (s.size() > word.size() && !std::isspace(static_cast<unsigned char>(s[word.size()]))) {
    return false;
  }
  s = trim(s.substr(word.size()));
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

[[noreturn]] void bad_curve(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "bad curve description '" + std::string(text) + "': " + why);
}

}  // namespace

Curve parse_curve(std::string_view text, const CurveOptions& options) {
  std::string_view s = trim(text);
  if (consume_word(s, "line")) {
    if (s.empty()) return CurveModel::affine_line(options);
    if (!consume_word(s, "minus") || s.empty()) bad_curve(text, "expected 'line minus <f>'");
    return CurveModel::localized_line(parse_poly(s, options.order), options);
  }
  if (consume_word(s, "plane")) {
    if (s.empty()) bad_curve(text, "missing plane equation");
    return CurveModel::plane(parse_poly(s, options.order), options);
  }
  if (consume_word(s, "space")) {
    const auto tau_pos = s.find("tau");
    if (tau_pos == std::string_view::npos) bad_curve(text, "missing 'tau P, Q, R'");
    const auto gens_text = trim(s.substr(0, tau_pos));
    const auto tau_text = trim(s.substr(tau_pos + 3));
    std::vector<Poly> gens;
    for (auto part : split(gens_text, ';')) {
      if (part.empty()) bad_curve(text, "empty generator");
      gens.push_back(parse_poly(part, options.order));
    }
    const auto comps = split(tau_text, ',');
    if (comps.size() != 3) bad_curve(text, "tau needs exactly three components");
    for (auto c : comps) {
      if (c.empty()) bad_curve(text, "empty tau component");
    }
    const TauLift tau{parse_poly(comps[0], options.order), parse_poly(comps[1], options.order),
                      parse_poly(comps[2], options.order)};
    return CurveModel::space(gens, tau, options);
  }
  bad_curve(text, "expected 'line', 'plane' or 'space'");
}

// ---------------------------------------------------------------------------

LocalizedElem normalize(LocalizedElem e, const Poly& f) {
  if (e.numerator.is_zero()) return LocalizedElem{e.numerator, 0};
  while (e.exponent > 0) {
    auto div = divide_univariate(e.numerator, f, Var::X);
    if (!div.remainder.is_zero()) break;
    e.numerator = std::move(div.quotient);
    --e.exponent;
  }
  return e;
}

LocalizedElem localized_add(const LocalizedElem& a, const LocalizedElem& b, const Poly& f) {
  const unsigned m = std::max(a.exponent, b.exponent);
  Poly num = a.numerator * pow(f, m - a.exponent) + b.numerator * pow(f, m - b.exponent);
  return normalize(LocalizedElem{std::move(num), m}, f);
}

LocalizedElem localized_sub(const LocalizedElem& a, const LocalizedElem& b, const Poly& f) {
  return localized_add(a, localized_scale(b, Rat(-1)), f);
}

LocalizedElem localized_mul(const LocalizedElem& a, const LocalizedElem& b, const Poly& f) {
  return normalize(LocalizedElem{a.numerator * b.numerator, a.exponent + b.exponent}, f);
}

LocalizedElem localized_scale(const LocalizedElem& a, const Rat& c) {
  if (c == 0) return LocalizedElem{Poly(a.numerator.order()), 0};
  return LocalizedElem{a.numerator * c, a.exponent};
}

bool same_value(const LocalizedElem& a, const LocalizedElem& b, const Poly& f) {
  const unsigned m = std::max(a.exponent, b.exponent);
  return a.numerator * pow(f, m - a.exponent) == b.numerator * pow(f, m - b.exponent);
}

}  // namespace bw
