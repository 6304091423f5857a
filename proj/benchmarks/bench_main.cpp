#include <vector>  // for vector

#include <benchmark/benchmark.h>

#include "skbrace/bracoid.hpp"
#include "skbrace/ideals.hpp"
#include "skbrace/ybe.hpp"

namespace {
  using namespace skb;

  SweepOptions threads(benchmark::State const& state) {
    SweepOptions s;
    s.threads = static_cast<unsigned>(state.range(0));
    return s;
  }

  std::pair<GroupMap, GroupMap> c8_s4_pair() {
    auto const                               c8 = groups::cyclic(8, "g");
    auto const                               s4 = groups::symmetric(4);
    std::vector<std::pair<Elem, Elem>> const a{{c8.at("g"), s4.at("[2341]")}};
    std::vector<std::pair<Elem, Elem>> const b{{s4.at("[2134]"), c8.at("g^4")},
                                               {s4.at("[2341]"), c8.at("g^4")}};
    return {make_map(c8, s4, a), make_map(s4, c8, b)};
  }

  void BM_SubgroupsS4(benchmark::State& state) {
    auto const g = groups::symmetric(4);
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_subgroups(g));
    }
  }
  BENCHMARK(BM_SubgroupsS4);

  void BM_AbelianMapsD8(benchmark::State& state) {
    auto const g = groups::dihedral(8);
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_abelian_maps(g, g));
    }
  }
  BENCHMARK(BM_AbelianMapsD8);

  void BM_VerifyBraceC8xS4(benchmark::State& state) {
    auto const [alpha, beta] = c8_s4_pair();
    auto const psi           = product_swap_map(alpha, beta);
    auto const dot           = OpTable::of(psi.domain());
    auto const circ          = circle_table(psi.domain(), psi);
    auto const sw            = threads(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_brace(dot, circ, sw));
    }
  }
  BENCHMARK(BM_VerifyBraceC8xS4)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

  void BM_ClassifyAllD4xD4(benchmark::State& state) {
    auto const g = groups::direct_product(groups::dihedral(4), groups::dihedral(4, "t", "u"));
    std::vector<std::pair<Elem, Elem>> const a{
        {g.at("r"), 0}, {g.at("s"), g.at("u")}, {g.at("t"), 0}, {g.at("u"), g.at("s")}};
    auto const psi = make_map(g, g, a);
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_strong_left_ideals(psi, 64));
    }
  }
  BENCHMARK(BM_ClassifyAllD4xD4)->Unit(benchmark::kMillisecond);

  void BM_VerifyYbeC8xS4(benchmark::State& state) {
    auto const [alpha, beta] = c8_s4_pair();
    auto const s             = build_ybe_product(alpha, beta);
    auto const sw            = threads(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_ybe(s, sw));
    }
  }
  BENCHMARK(BM_VerifyYbeC8xS4)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

  void BM_ContainedBraceC8xS4(benchmark::State& state) {
    auto const [alpha, beta] = c8_s4_pair();
    auto const        psi    = product_swap_map(alpha, beta);
    auto const&       g      = psi.domain();
    std::vector<Elem> h, k;
    for (Elem x = 0; x < 8; ++x) {
      std::vector<Elem> c{x, 0};
      h.push_back(g.from_coordinates(c));
    }
    for (Elem x = 0; x < 24; ++x) {
      std::vector<Elem> c{0, x};
      k.push_back(g.from_coordinates(c));
    }
    auto const b  = bracoid_from_c2(psi, Subgroup::from_members(g, h));
    auto const ks = Subgroup::from_members(acting_group(b), k);
    for (auto _ : state) {
      benchmark::DoNotOptimize(build_ybe_from_contained_brace(b, ks));
    }
  }
  BENCHMARK(BM_ContainedBraceC8xS4)->Unit(benchmark::kMillisecond);
}  // namespace

BENCHMARK_MAIN();
