#pragma once

// Batch front end: one job in, one JSON result document out.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bw/error.hpp"
#include "bw/poly.hpp"

namespace bw::cli {

enum class Command { Check, Decompose, Localize, Verify };

std::string_view to_string(Command c) noexcept;

struct JobSpec {
  Command command = Command::Check;
  std::string curve;
  /// Coefficient text; required by decompose and verify, optional for
  /// localize (a line polynomial).
  std::string target;
  /// "a1, b1; a2, b2" -- a decomposition to verify or to localize.
  std::string pairs;
  /// Localization exponent: the output decomposes g / f^(2k).
  std::optional<unsigned> k;
  MonomialOrder order = MonomialOrder::Lex;
  bool trace = false;
  std::uint64_t max_steps = 1'000'000;
};

struct ResultDoc {
  Command command = Command::Check;
  bool ok = false;
  std::string curve;
  std::optional<std::string> target;
  std::vector<std::pair<std::string, std::string>> decomposition;
  std::optional<std::size_t> length;
  std::optional<std::size_t> bound;
  /// Recombined-equals-target, always computed.
  std::optional<bool> verification;
  std::optional<nlohmann::json> certificate;
  std::optional<nlohmann::json> trace;
  std::optional<ErrorCode> error;
  std::string error_message;

  /// 0 ok, 2 parse/usage, 3 validation, 4 resource budget.
  int exit_code() const;
  nlohmann::json to_json() const;
  /// One-line human summary.
  std::string summary() const;
};

int exit_code_for(ErrorCode code) noexcept;

/// Never throws for bad input: errors are reported in the document.
ResultDoc run(const JobSpec& job);

}  // namespace bw::cli
