#include <vector>

#include <benchmark/benchmark.h>

#include "bw/bracketwidth.hpp"

namespace {

using namespace bw;

// Groebner basis of (F, F_x, F_y) for y^2 = x^n + x + 1.
void BM_JacobianBasis(benchmark::State& state) {
  const Poly f = parse_poly("y^2 - x^" + std::to_string(state.range(0)) + " - x - 1");
  const std::vector<Poly> gens{f, derivative(f, Var::X), derivative(f, Var::Y)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::Lex));
}
BENCHMARK(BM_JacobianBasis)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void BM_TwoBracketPlane(benchmark::State& state) {
  const Curve c = CurveModel::plane(parse_poly("y^2 - x^" + std::to_string(state.range(0)) + " - x - 1"));
  const RingElem h = c->reduce(parse_poly("x^4*y^2 - 3*x^2*y + 7*x - 2"));
  for (auto _ : state) benchmark::DoNotOptimize(two_bracket_plane(c, h));
}
BENCHMARK(BM_TwoBracketPlane)->Arg(3)->Arg(5)->Arg(7);

void BM_ThreeBracketTwistedCubic(benchmark::State& state) {
  const Curve c = parse_curve("space y - x^2; z - x^3 tau 1, 2*x, 3*x^2");
  const RingElem h = c->reduce(parse_poly("x*y*z - 4*z^2 + y - 1"));
  for (auto _ : state) benchmark::DoNotOptimize(three_bracket_space(c, h));
}
BENCHMARK(BM_ThreeBracketTwistedCubic);

void BM_RationalDecompose(benchmark::State& state) {
  const Curve c = CurveModel::localized_line(parse_poly("x^3 - x"));
  const LocalizedElem t = c->localize(parse_poly("x^5 - 2*x + 3"), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rational_decompose(c, t));
}
BENCHMARK(BM_RationalDecompose)->DenseRange(1, 5, 2);

}  // namespace

BENCHMARK_MAIN();
