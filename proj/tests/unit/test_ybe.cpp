#include <array>   // for array
#include <vector>  // for vector

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skbrace/bracoid.hpp"
#include "skbrace/error.hpp"
#include "skbrace/ybe.hpp"

namespace skb {
  namespace {
    GroupMap d4_psi() {
      auto const                               g = groups::dihedral(4);
      std::vector<std::pair<Elem, Elem>> const a{{g.at("r"), g.at("rs")}, {g.at("s"), 0}};
      return make_map(g, g, a);
    }

    oracle::Solution as_oracle(YbeSolution const& s) {
      return [s](Elem x, Elem y) { return s(x, y); };
    }

    std::pair<GroupMap, GroupMap> c8_s4_pair() {
      auto const                               c8 = groups::cyclic(8, "g");
      auto const                               s4 = groups::symmetric(4);
      std::vector<std::pair<Elem, Elem>> const a{{c8.at("g"), s4.at("[2341]")}};
      std::vector<std::pair<Elem, Elem>> const b{{s4.at("[2134]"), c8.at("g^4")},
                                                 {s4.at("[2341]"), c8.at("g^4")}};
      return {make_map(c8, s4, a), make_map(s4, c8, b)};
    }

    Subgroup factor(FiniteGroup const& g, std::size_t which, std::size_t n) {
      std::vector<Elem> m;
      for (Elem a = 0; a < n; ++a) {
        std::vector<Elem> c{0, 0};
        c[which] = a;
        m.push_back(g.from_coordinates(c));
      }
      return Subgroup::from_members(g, m);
    }
  }  // namespace

  TEST(Ybe, IdempotentOnD4) {
    auto const psi = d4_psi();
    auto const g   = psi.domain();
    auto const phi = phi_values(psi);
    auto const s   = build_ybe_idempotent(psi);
    Elem const r = g.at("r"), sg = g.at("s");
    EXPECT_EQ(s(r, sg), std::pair(g.at("r^2s"), r));
    for (Elem x = 0; x < 8; ++x) {
      EXPECT_EQ(s(x, 0), std::pair(Elem{0}, x));
      EXPECT_EQ(s(0, x), std::pair(phi[x], psi(x)));
      for (Elem y = 0; y < 8; ++y) {
        // λ_x(y) = ψ(x)φ(y)ψ(x^-1), ρ_y(x) = ψ(x)φ(y)^-1 φ(x^-1)^-1 y
        EXPECT_EQ(s.lambda_of(x, y), g.mul(psi(x), phi[y], psi(g.inv(x))));
        EXPECT_EQ(s.rho_of(y, x), g.mul(g.mul(psi(x), g.inv(phi[y])), g.inv(phi[g.inv(x)]), y));
      }
    }
    auto const rep = verify_ybe(s);
    EXPECT_TRUE(rep.holds);
    EXPECT_FALSE(rep.sampled);
    EXPECT_FALSE(rep.nondegeneracy.left);
    EXPECT_TRUE(rep.nondegeneracy.right);
    ASSERT_TRUE(rep.nondegeneracy.left_witness.has_value());
    auto const [x, y1, y2] = *rep.nondegeneracy.left_witness;
    EXPECT_NE(y1, y2);
    EXPECT_EQ(s.lambda_of(x, y1), s.lambda_of(x, y2));
    EXPECT_TRUE(oracle::braid_holds(8, as_oracle(s)));
    EXPECT_FALSE(oracle::left_nondegenerate(8, as_oracle(s)));
    EXPECT_TRUE(oracle::right_nondegenerate(8, as_oracle(s)));
  }

  // Every idempotent ψ in Ab(G) gives a solution; the oracle agrees.
  TEST(Ybe, IdempotentProperty) {
    for (auto const& g : {groups::dihedral(4), groups::symmetric(3), groups::dihedral(6),
                          groups::direct_product(groups::cyclic(2), groups::dihedral(4))}) {
      for (auto const& psi : enumerate_abelian_maps(g, g)) {
        if (!(compose(psi, psi) == psi)) {
          EXPECT_THROW(build_ybe_idempotent(psi), PreconditionError);
          continue;
        }
        auto const s = build_ybe_idempotent(psi);
        EXPECT_TRUE(verify_ybe(s).holds);
        EXPECT_TRUE(oracle::braid_holds(g.order(), as_oracle(s)));
      }
    }
  }

  TEST(Ybe, ProductOnC8xS4) {
    auto const [alpha, beta] = c8_s4_pair();
    auto const s             = build_ybe_product(alpha, beta);
    ASSERT_EQ(s.order, 192u);
    SweepOptions sw;
    sw.exhaustive_cap = 192;
    auto const rep    = verify_ybe(s, sw);
    EXPECT_TRUE(rep.holds);
    EXPECT_FALSE(rep.sampled);
    EXPECT_FALSE(rep.witness.has_value());
  }

  TEST(Ybe, ProductFormula) {
    auto const [alpha, beta] = c8_s4_pair();
    auto const  s            = build_ybe_product(alpha, beta);
    auto const  g            = product_swap_map(alpha, beta).domain();
    auto const& g1           = alpha.domain();
    auto const& g2           = alpha.codomain();
    oracle::Rng rng(42);
    for (int trial = 0; trial < 4000; ++trial) {
      auto const x  = static_cast<Elem>(rng.below(g.order()));
      auto const y  = static_cast<Elem>(rng.below(g.order()));
      auto const xc = g.coordinates(x), yc = g.coordinates(y);
      Elem const a = alpha(xc[0]), ai = g2.inv(a);
      std::vector<Elem> lam{0, g2.mul(ai, yc[1], a)};
      std::vector<Elem> rho{
          g1.mul(g1.mul(beta(yc[1]), xc[0]), g1.mul(beta(g2.inv(xc[1])), yc[0]),
                 beta(g2.mul(xc[1], g2.inv(yc[1])))),
          g2.mul(g2.mul(ai, g2.inv(yc[1]), a), g2.mul(xc[1], ai), g2.mul(yc[1], a))};
      ASSERT_EQ(s(x, y), std::pair(g.from_coordinates(lam), g.from_coordinates(rho)));
    }
  }

  TEST(Ybe, ProductPropertyOnSmallPairs) {
    auto const c3 = groups::cyclic(3);
    auto const s3 = groups::symmetric(3);
    auto const d4 = groups::dihedral(4);
    oracle::Rng rng(9);
    for (auto const& [g1, g2] : std::vector<std::pair<FiniteGroup, FiniteGroup>>{
             {c3, s3}, {s3, d4}, {d4, s3}, {groups::cyclic(4), d4}}) {
      auto const as = enumerate_abelian_maps(g1, g2);
      auto const bs = enumerate_abelian_maps(g2, g1);
      for (int trial = 0; trial < 4; ++trial) {
        auto const& a = as[rng.below(as.size())];
        auto const& b = bs[rng.below(bs.size())];
        auto const  s = build_ybe_product(a, b);
        EXPECT_TRUE(verify_ybe(s).holds);
        EXPECT_TRUE(oracle::braid_holds(s.order, as_oracle(s)));
        EXPECT_EQ(verify_ybe(s).nondegeneracy.left, oracle::left_nondegenerate(s.order, as_oracle(s)));
        EXPECT_EQ(verify_ybe(s).nondegeneracy.right,
                  oracle::right_nondegenerate(s.order, as_oracle(s)));
      }
    }
  }

  TEST(Ybe, ContainedBraceGivesTheProductSolution) {
    auto const c3    = groups::cyclic(3);
    auto const alpha = left_regular_map(c3);
    auto const beta  = trivial_map(alpha.codomain(), c3);
    auto const psi   = product_swap_map(alpha, beta);
    auto const& g    = psi.domain();
    auto const b     = bracoid_from_c2(psi, factor(g, 0, 3));
    // The acting group shares the element numbering of G.
    auto const g2    = factor(g, 1, 6);
    auto const k     = Subgroup::from_members(acting_group(b), {g2.members().begin(), g2.members().end()});
    auto const s     = build_ybe_from_contained_brace(b, k);
    EXPECT_TRUE(s.same_map(build_ybe_product(alpha, beta)));
    EXPECT_TRUE(verify_ybe(s).holds);
  }

  TEST(Ybe, ContainedBraceOnD4Tower) {
    auto const psi = d4_psi();
    auto const b   = phi_tower_bracoid(psi, 1);
    auto const k   = phi_of(psi).image_subgroup();
    auto const s   = build_ybe_from_contained_brace(b, k);
    EXPECT_EQ(s.order, 8u);
    EXPECT_TRUE(verify_ybe(s).holds);
    EXPECT_TRUE(oracle::braid_holds(8, as_oracle(s)));
    EXPECT_THROW(build_ybe_from_contained_brace(b, fixed_subgroup(psi)), PreconditionError);
  }

  TEST(Ybe, AbelianPair) {
    auto const g = groups::direct_product(groups::cyclic(4, "a"), groups::cyclic(2, "b"));
    std::vector<std::pair<Elem, Elem>> const a{{g.at("a"), 0}, {g.at("b"), g.at("b")}};
    auto const psi     = make_map(g, g, a);
    auto const phi     = phi_values(psi);
    auto const [r, rp] = build_ybe_abelian_pair(psi);
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        EXPECT_EQ(r(x, y), std::pair(phi[y], g.mul(psi(y), x)));
        EXPECT_EQ(rp(x, y), std::pair(psi(y), g.mul(phi[y], x)));
      }
    }
    for (auto const* s : {&r, &rp}) {
      auto const rep = verify_ybe(*s);
      EXPECT_TRUE(rep.holds);
      EXPECT_FALSE(rep.nondegeneracy.left);
      EXPECT_TRUE(rep.nondegeneracy.right);
      EXPECT_TRUE(oracle::braid_holds(g.order(), as_oracle(*s)));
    }
    EXPECT_THROW(build_ybe_abelian_pair(d4_psi()), PreconditionError);
  }

  TEST(Ybe, CorruptedSolutionHasAWitness) {
    auto s = build_ybe_idempotent(d4_psi());
    std::swap(s.lambda[9], s.lambda[10]);
    auto const rep = verify_ybe(s);
    EXPECT_FALSE(rep.holds);
    ASSERT_TRUE(rep.witness.has_value());
    EXPECT_FALSE(oracle::braid_holds(8, as_oracle(s)));
  }

  TEST(Ybe, SampledCheckIsDeterministicAcrossThreads) {
    auto const [alpha, beta] = c8_s4_pair();
    auto s                   = build_ybe_product(alpha, beta);
    s.rho[5 * s.order + 7]   = s.rho[5 * s.order + 8];
    SweepOptions s1;
    s1.force_sampling = true;
    s1.samples        = 20000;
    s1.seed           = 77;
    s1.threads        = 1;
    SweepOptions s3   = s1;
    s3.threads        = 3;
    auto const r1     = verify_ybe(s, s1);
    auto const r3     = verify_ybe(s, s3);
    EXPECT_TRUE(r1.sampled);
    EXPECT_EQ(r1.holds, r3.holds);
    EXPECT_EQ(r1.witness, r3.witness);
  }

}  // namespace skb
