#include "bracketwidth/cli.hpp"

#include <cctype>
#include <string_view>

#include "bw/curve.hpp"
#include "bw/decompose.hpp"
#include "bw/liealg.hpp"
#include "bw/text.hpp"

namespace bw::cli {

using nlohmann::json;

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Check: return "check";
    case Command::Decompose: return "decompose";
    case Command::Localize: return "localize";
    case Command::Verify: return "verify";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument: return 2;
    case ErrorCode::ResourceExceeded: return 4;
    default: return 3;
  }
}

int ResultDoc::exit_code() const { return ok ? 0 : exit_code_for(*error); }

json ResultDoc::to_json() const {
  json j;
  j["status"] = ok ? "ok" : "error";
  j["command"] = std::string(bw::cli::to_string(command));
  j["curve"] = curve;
  if (target) j["target"] = *target;
  if (ok && (command != Command::Check)) {
    json pairs = json::array();
    for (const auto& [a, b] : decomposition) pairs.push_back(json::array({a, b}));
    j["decomposition"] = std::move(pairs);
  }
  if (length) j["length"] = *length;
  if (bound) j["bound"] = *bound;
  if (verification) j["verification"] = *verification;
  if (certificate) j["certificate"] = *certificate;
  if (trace) j["trace"] = *trace;
  if (error) {
    j["error"] = {{"code", std::string(bw::to_string(*error))}, {"message", error_message}};
  }
  return j;
}

std::string ResultDoc::summary() const {
  std::string s = std::string(bw::cli::to_string(command)) + ": ";
  if (!ok) return s + "error " + std::string(bw::to_string(*error)) + ": " + error_message;
  s += "ok";
  if (length) s += ", length " + std::to_string(*length);
  if (bound) s += " (bound " + std::to_string(*bound) + ")";
  if (verification) s += *verification ? ", verified" : ", NOT verified";
  return s;
}

namespace {

json poly_list(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(bw::to_string(p));
  return out;
}

json certificate_json(const MembershipCertificate& cert) {
  return json{{"target", bw::to_string(cert.target())},
              {"generators", poly_list(cert.generators())},
              {"cofactors", poly_list(cert.cofactors())},
              {"verified", cert.verify()}};
}

json curve_certificate(const CurveModel& c) {
  json j;
  j["kind"] = std::string(bw::to_string(c.kind()));
  j["tau"] = json::array(
      {bw::to_string(c.tau().p), bw::to_string(c.tau().q), bw::to_string(c.tau().r)});
  switch (c.kind()) {
    case CurveKind::AffineLine: break;
    case CurveKind::LocalizedLine:
      j["f"] = bw::to_string(c.localizing_poly());
      j["squarefree"] = std::get<LocalizedLine>(c.model()).squarefree;
      break;
    case CurveKind::PlaneCurve:
      j["smoothness"] = certificate_json(std::get<PlaneCurve>(c.model()).smooth_certificate);
      break;
    case CurveKind::SpaceCurve:
      j["ideal_basis"] = poly_list(c.ideal().basis);
      j["unit"] = certificate_json(std::get<SpaceCurve>(c.model()).unit_certificate);
      break;
  }
  return j;
}

json trace_json(const DecompTrace& t) {
  json j = json::object();
  if (!t.certificate_cofactors.empty()) j["certificate_cofactors"] = poly_list(t.certificate_cofactors);
  auto put = [&j](const char* key, const std::optional<Poly>& p) {
    if (p) j[key] = bw::to_string(*p);
  };
  put("F", t.slot_f);
  put("G", t.slot_g);
  put("H", t.slot_h);
  put("r", t.r);
  put("g", t.g);
  put("h2", t.h2);
  put("f", t.f);
  put("antiderivative", t.antiderivative);
  put("line_target", t.line_target);
  if (t.k) j["k"] = *t.k;
  return j;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BracketDecomp parse_pairs(const Curve& curve, std::string_view text) {
  BracketDecomp d{curve, {}};
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ';') continue;
    const auto pair_text = trim(text.substr(start, i - start));
    start = i + 1;
    if (pair_text.empty()) continue;
    const auto comma = pair_text.find(',');
    if (comma == std::string_view::npos || pair_text.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "pair '" + std::string(pair_text) + "' needs the form 'a, b'");
    }
    d.pairs.emplace_back(VField::parse(curve, trim(pair_text.substr(0, comma))),
                         VField::parse(curve, trim(pair_text.substr(comma + 1))));
  }
  return d;
}

void fill_decomposition(ResultDoc& doc, const BracketDecomp& d) {
  doc.decomposition.clear();
  for (const auto& [u, v] : d.pairs) doc.decomposition.emplace_back(u.to_string(), v.to_string());
  doc.length = d.length();
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::ParseError, what);
}

void run_check(const Curve& curve, ResultDoc& doc) {
  doc.certificate = curve_certificate(*curve);
}

void run_decompose(const JobSpec& job, const Curve& curve, ResultDoc& doc) {
  require(!job.target.empty(), "decompose needs --target");
  const VField target = VField::parse(curve, job.target);
  doc.target = target.to_string();
  DecompTrace trace;
  const BracketDecomp d = decompose(target, job.trace ? &trace : nullptr);
  fill_decomposition(doc, d);
  doc.bound = length_bound(curve->kind());
  doc.verification = recombine(d) == target && d.length() <= *doc.bound;
  if (job.trace) doc.trace = trace_json(trace);
  if (!*doc.verification) {
    throw Error(ErrorCode::CertificateFailure, "decomposition failed re-verification");
  }
}

void run_localize(const JobSpec& job, const Curve& curve, ResultDoc& doc) {
  if (curve->kind() != CurveKind::LocalizedLine) {
    throw Error(ErrorCode::InvalidArgument, "localize needs a curve of the form 'line minus <f>'");
  }
  require(job.k.has_value(), "localize needs --k");
  require(job.pairs.empty() != job.target.empty(), "localize needs exactly one of --pairs, --target");
  const Curve line = CurveModel::affine_line(curve->options());
  DecompTrace trace;
  const BracketDecomp line_d =
      job.pairs.empty()
          ? single_bracket_line(line, line->reduce(parse_poly(job.target, curve->order())),
                                job.trace ? &trace : nullptr)
          : parse_pairs(line, job.pairs);
  const Poly g = recombine(line_d).ring_coeff().repr;
  const LocalizedElem expected = curve->localize(g, 2 * *job.k);
  doc.target = curve->to_string(expected);
  const BracketDecomp d = localize_decomp(line_d, curve, *job.k);
  fill_decomposition(doc, d);
  doc.bound = line_d.length();
  doc.verification = recombine(d).localized_coeff() == expected && d.length() == line_d.length();
  if (job.trace) {
    trace.line_target = g;
    trace.k = *job.k;
    doc.trace = trace_json(trace);
  }
  if (!*doc.verification) {
    throw Error(ErrorCode::CertificateFailure, "localized decomposition failed re-verification");
  }
}

void run_verify(const JobSpec& job, const Curve& curve, ResultDoc& doc) {
  require(!job.target.empty(), "verify needs --target");
  const VField target = VField::parse(curve, job.target);
  doc.target = target.to_string();
  const BracketDecomp d = parse_pairs(curve, job.pairs);
  fill_decomposition(doc, d);
  const VField sum = recombine(d);
  doc.verification = sum == target;
  if (!*doc.verification) {
    throw Error(ErrorCode::VerificationFailed,
                "brackets sum to " + sum.to_string() + ", not " + target.to_string());
  }
}

}  // namespace

ResultDoc run(const JobSpec& job) {
  ResultDoc doc;
  doc.command = job.command;
  doc.curve = job.curve;
  try {
    require(!job.curve.empty(), "missing --curve");
    CurveOptions options;
    options.order = job.order;
    options.buchberger.max_steps = job.max_steps;
    const Curve curve = parse_curve(job.curve, options);
    doc.curve = curve->describe();
    switch (job.command) {
      case Command::Check: run_check(curve, doc); break;
      case Command::Decompose: run_decompose(job, curve, doc); break;
      case Command::Localize: run_localize(job, curve, doc); break;
      case Command::Verify: run_verify(job, curve, doc); break;
    }
    doc.ok = true;
  } catch (const Error& e) {
    doc.ok = false;
    doc.error = e.code();
    doc.error_message = e.what();
  }
  return doc;
}

}  // namespace bw::cli
