// bracketwidth: exact bracket decompositions of vector fields on affine curves.
//
//   bracketwidth check     --curve "plane y^2 - x^3 - x"
//   bracketwidth decompose --curve "plane y^2 - x^3 - x" --target "1"
//   bracketwidth localize  --curve "line minus x" --target "1" --k 1
//   bracketwidth verify    --curve "line" --target "1" --pairs "-x, 1"
//
// The JSON result goes to stdout, a one-line summary to stderr.

#include <iostream>

#include <CLI11.hpp>

#include "bracketwidth/cli.hpp"

int main(int argc, char** argv) {
  using bw::cli::Command;

  CLI::App app{"Exact bracket decompositions on smooth affine curves"};
  app.require_subcommand(1);

  bw::cli::JobSpec job;
  std::string order = "lex";
  unsigned k = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--curve", job.curve, "Curve: line | line minus <f> | plane <F> | "
                                          "space <g1>; <g2> tau <P>, <Q>, <R>")
        ->required();
    sub->add_option("--order", order, "Monomial order")
        ->check(CLI::IsMember({"lex", "grlex"}))
        ->capture_default_str();
    sub->add_flag("--trace", job.trace, "Include intermediates in the output");
    sub->add_option("--max-steps", job.max_steps, "Groebner reduction step budget")
        ->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "Validate a curve and print its certificate");
  add_common(check);

  auto* decompose = app.add_subcommand("decompose", "Write target*tau as a sum of brackets");
  add_common(decompose);
  decompose->add_option("--target", job.target, "Coefficient of the target field")->required();

  auto* localize = app.add_subcommand("localize", "Carry a line decomposition to line minus f");
  add_common(localize);
  localize->add_option("--target", job.target, "Line polynomial g to decompose first");
  localize->add_option("--pairs", job.pairs, "Line decomposition 'a1, b1; a2, b2'");
  auto* k_opt = localize->add_option("--k", k, "Exponent k: result decomposes g/f^(2k)")->required();

  auto* verify = app.add_subcommand("verify", "Check that given brackets sum to the target");
  add_common(verify);
  verify->add_option("--target", job.target, "Coefficient of the target field")->required();
  verify->add_option("--pairs", job.pairs, "Decomposition 'a1, b1; a2, b2'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check->parsed()) job.command = Command::Check;
  if (decompose->parsed()) job.command = Command::Decompose;
  if (localize->parsed()) job.command = Command::Localize;
  if (verify->parsed()) job.command = Command::Verify;
  job.order = order == "grlex" ? bw::MonomialOrder::GrLex : bw::MonomialOrder::Lex;
  if (k_opt->count() > 0) job.k = k;

  const auto doc = bw::cli::run(job);
  std::cout << doc.to_json().dump(2) << '\n';
  std::cerr << doc.summary() << '\n';
  return doc.exit_code();
}
