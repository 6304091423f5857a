#include <algorithm>  // for find, swap
#include <set>        // for set
#include <vector>     // for vector

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skbrace/bracoid.hpp"
#include "skbrace/error.hpp"
#include "skbrace/ideals.hpp"

namespace skb {
  namespace {
    GroupMap d4_psi() {
      auto const                               g = groups::dihedral(4);
      std::vector<std::pair<Elem, Elem>> const a{{g.at("r"), g.at("rs")}, {g.at("s"), 0}};
      return make_map(g, g, a);
    }

    // Independent check of the action axioms, transitivity and the relation.
    bool oracle_bracoid(Bracoid const& b) {
      std::size_t const ng = b.acting_order(), nn = b.target_order();
      auto const        star = [&](Elem a, Elem c) { return b.target.op(a, c); };
      for (Elem eta = 0; eta < nn; ++eta) {
        if (b.act(0, eta) != eta) {
          return false;
        }
      }
      for (Elem g = 0; g < ng; ++g) {
        for (Elem h = 0; h < ng; ++h) {
          for (Elem eta = 0; eta < nn; ++eta) {
            if (b.act(b.acting.op(g, h), eta) != b.act(g, b.act(h, eta))) {
              return false;
            }
          }
        }
      }
      std::vector<bool> reached(nn, false);
      for (Elem g = 0; g < ng; ++g) {
        reached[b.act(g, 0)] = true;
      }
      if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
        return false;
      }
      for (Elem g = 0; g < ng; ++g) {
        Elem const ge  = b.act(g, 0);
        Elem const gei = oracle::inverse_in(nn, star, ge);
        for (Elem eta = 0; eta < nn; ++eta) {
          for (Elem mu = 0; mu < nn; ++mu) {
            if (b.act(g, star(eta, mu)) != star(star(b.act(g, eta), gei), b.act(g, mu))) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  TEST(Bracoid, FromBrace) {
    auto const psi = d4_psi();
    auto const g   = psi.domain();
    auto const b   = bracoid_from_brace(brace_from_map(g, psi));
    EXPECT_TRUE(verify_bracoid(b).ok());
    EXPECT_TRUE(oracle_bracoid(b));
    EXPECT_EQ(b.target_order(), 8u);
  }

  TEST(Bracoid, FromC1OnFix) {
    auto const psi = d4_psi();
    auto const fix = fixed_subgroup(psi);
    for (bool opposite : {false, true}) {
      auto const b = bracoid_from_c1(psi, fix, opposite);
      EXPECT_EQ(b.acting_order(), 8u);
      EXPECT_EQ(b.target_order(), 4u);
      EXPECT_TRUE(verify_bracoid(b).ok());
      EXPECT_TRUE(oracle_bracoid(b));
    }
  }

  TEST(Bracoid, EveryC1SubgroupGivesABracoid) {
    auto const psi = d4_psi();
    auto const g   = psi.domain();
    IdealClassifier cls(psi);
    std::size_t     refused = 0;
    for (auto const& h : enumerate_subgroups(g)) {
      if (cls.c1(h)) {
        auto const b = bracoid_from_c1(psi, h);
        EXPECT_TRUE(oracle_bracoid(b));
      } else {
        ++refused;
        EXPECT_THROW(bracoid_from_c1(psi, h), PreconditionError);
      }
      if (cls.c2(h)) {
        auto const b = bracoid_from_c2(psi, h);
        EXPECT_TRUE(oracle_bracoid(b));
        EXPECT_EQ(b.brace_reducible, std::optional<bool>(cls.c1(h)));
      } else {
        EXPECT_THROW(bracoid_from_c2(psi, h), PreconditionError);
      }
    }
    EXPECT_GT(refused, 0u);
  }

  TEST(Bracoid, KernelReductionGivesTheQuotientBrace) {
    auto const psi     = d4_psi();
    auto const g       = psi.domain();
    auto const ker     = map_analysis(psi).kernel;
    auto const b       = bracoid_from_c1(psi, ker);
    auto const reduced = reduce_bracoid(b);
    auto const q       = quotient_brace(SkewBrace::make(circle_table(g, psi), OpTable::of(g), psi),
                                  ker.members());
    auto const qb      = bracoid_from_brace(q);
    EXPECT_EQ(reduced.acting, qb.acting);
    EXPECT_EQ(reduced.target, qb.target);
    EXPECT_EQ(reduced.action, qb.action);
    EXPECT_EQ(action_kernel(b).size(), ker.order());
  }

  TEST(Bracoid, FaithfulActionIsNotReduced) {
    auto const psi = d4_psi();
    auto const b   = bracoid_from_c1(psi, fixed_subgroup(psi));
    // The core of a non-normal subgroup of order 2 in D4 is trivial.
    EXPECT_EQ(action_kernel(b).size(), 1u);
    auto const r = reduce_bracoid(b);
    EXPECT_EQ(r.action, b.action);
  }

  TEST(Bracoid, TowerBracoids) {
    auto const psi = d4_psi();
    auto const g   = psi.domain();
    for (std::size_t n = 0; n <= 4; ++n) {
      auto const b   = phi_tower_bracoid(psi, n);
      auto const img = phi_power(psi, n);
      EXPECT_EQ(b.target_order(), std::set<Elem>(img.begin(), img.end()).size());
      EXPECT_TRUE(verify_bracoid(b).ok());
      EXPECT_TRUE(oracle_bracoid(b));
    }
    EXPECT_EQ(phi_tower_bracoid(psi, 0).target_order(), g.order());
  }

  TEST(Bracoid, ContainedBraceIsRegular) {
    auto const psi = d4_psi();
    auto const b   = phi_tower_bracoid(psi, 1);
    auto const k   = find_contained_brace(b);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(k->order(), b.target_order());
    EXPECT_TRUE(acts_regularly(b, k->members()));
    auto const img = phi_of(psi).image_subgroup();
    EXPECT_TRUE(acts_regularly(b, img.members()));
    auto const fix = fixed_subgroup(psi);
    EXPECT_FALSE(acts_regularly(b, fix.members()));
  }

  TEST(Bracoid, GeneralisedCaseActionFormula) {
    // (g1, g2) ⊙ x2 = g2 α(g1^-1) x2 α(g1) on G/(G1 x {e}).
    auto const c3    = groups::cyclic(3);
    auto const alpha = left_regular_map(c3);
    auto const beta  = trivial_map(alpha.codomain(), c3);
    auto const psi   = product_swap_map(alpha, beta);
    auto const& g    = psi.domain();
    std::vector<Elem> h;
    for (Elem a = 0; a < 3; ++a) {
      std::vector<Elem> c{a, 0};
      h.push_back(g.from_coordinates(c));
    }
    auto const b  = bracoid_from_c2(psi, Subgroup::from_members(g, h));
    auto const& s = alpha.codomain();
    EXPECT_TRUE(oracle_bracoid(b));
    EXPECT_EQ(b.brace_reducible, std::optional<bool>(false));
    for (Elem x = 0; x < g.order(); ++x) {
      auto const c = g.coordinates(x);
      for (Elem eta = 0; eta < b.target_order(); ++eta) {
        Elem const        x2 = g.coordinates(b.target_embedding[eta])[1];
        Elem const        a  = alpha(c[0]);
        std::vector<Elem> want{0, s.mul(c[1], s.inv(a), s.mul(x2, a))};
        EXPECT_EQ(b.target_embedding[b.act(x, eta)], g.from_coordinates(want));
      }
    }
  }

  TEST(Bracoid, CorruptedActionFailsWithWitness) {
    auto const psi = d4_psi();
    auto       b   = bracoid_from_c1(psi, fixed_subgroup(psi));
    // Swap two images in the row of r: still a permutation, breaks the relation.
    std::size_t const row = psi.domain().at("r") * b.target_order();
    std::swap(b.action[row + 1], b.action[row + 2]);
    auto const r = verify_bracoid(b);
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_FALSE(r.first_failure->witness.empty());
    EXPECT_FALSE(oracle_bracoid(b));
  }

  TEST(Bracoid, IdentityFailureIsReported) {
    auto const psi = d4_psi();
    auto       b   = bracoid_from_c1(psi, fixed_subgroup(psi));
    std::swap(b.action[0], b.action[1]);
    auto const r = verify_bracoid(b);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_EQ(r.first_failure->kind, "identity");
  }

}  // namespace skb
