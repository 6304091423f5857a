#include <algorithm>  // for sort
#include <map>        // for map
#include <vector>     // for vector

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skbrace/error.hpp"
#include "skbrace/group.hpp"

namespace skb {
  namespace {
    FiniteGroup q8() {
      auto const t = oracle::quaternion();
      return FiniteGroup::from_table(8, t.mul, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    }

    std::vector<std::vector<Elem>> library_subgroups(FiniteGroup const& g) {
      std::vector<std::vector<Elem>> out;
      for (auto const& h : enumerate_subgroups(g)) {
        out.emplace_back(h.members().begin(), h.members().end());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::map<std::size_t, std::size_t> order_profile(oracle::Table const& t) {
      std::map<std::size_t, std::size_t> prof;
      for (Elem a = 0; a < t.n; ++a) {
        std::size_t k = 1;
        for (Elem x = a; x != 0; x = t.op(x, a)) {
          ++k;
        }
        ++prof[k];
      }
      return prof;
    }

    std::vector<FiniteGroup> catalog() {
      std::vector<FiniteGroup> gs;
      for (std::size_t n = 1; n <= 12; ++n) {
        gs.push_back(groups::cyclic(n));
      }
      for (std::size_t n = 3; n <= 6; ++n) {
        gs.push_back(groups::dihedral(n));
      }
      gs.push_back(groups::symmetric(3));
      gs.push_back(groups::symmetric(4));
      gs.push_back(q8());
      gs.push_back(groups::direct_product(groups::cyclic(2), groups::dihedral(4)));
      return gs;
    }
  }  // namespace

  TEST(Group, SubgroupsMatchBruteForce) {
    for (auto const& g : catalog()) {
      auto expected = oracle::subgroups(oracle::table_of(g));
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(library_subgroups(g), expected) << "order " << g.order();
    }
  }

  TEST(Group, FrozenSubgroupCounts) {
    EXPECT_EQ(enumerate_subgroups(groups::dihedral(4)).size(), 10u);
    EXPECT_EQ(enumerate_subgroups(groups::dihedral(6)).size(), 16u);
    EXPECT_EQ(enumerate_subgroups(groups::symmetric(3)).size(), 6u);
    EXPECT_EQ(enumerate_subgroups(groups::symmetric(4)).size(), 30u);
    EXPECT_EQ(enumerate_subgroups(groups::cyclic(12)).size(), 6u);
    EXPECT_EQ(enumerate_subgroups(q8()).size(), 6u);
  }

  TEST(Group, BuildersAgreeWithIndependentConstructions) {
    // Same element-order profile as the oracle's own numbering.
    EXPECT_EQ(order_profile(oracle::table_of(groups::dihedral(5))),
              order_profile(oracle::dihedral(5)));
    EXPECT_EQ(order_profile(oracle::table_of(groups::symmetric(4))),
              order_profile(oracle::symmetric(4)));
    EXPECT_EQ(order_profile(oracle::table_of(groups::cyclic(9))), order_profile(oracle::cyclic(9)));
    // The symmetric builder uses the same numbering and composition order.
    EXPECT_EQ(oracle::table_of(groups::symmetric(4)).mul, oracle::symmetric(4).mul);
    EXPECT_EQ(oracle::table_of(groups::dihedral(4)).mul, oracle::dihedral(4).mul);
  }

  TEST(Group, ElementNames) {
    auto const d4 = groups::dihedral(4);
    EXPECT_EQ(d4.name(0), "e");
    EXPECT_EQ(d4.name(d4.mul(d4.at("r^2"), d4.at("s"))), "r^2s");
    EXPECT_EQ(d4.mul(d4.at("r"), d4.at("s")), d4.at("rs"));
    EXPECT_EQ(d4.at("3"), 3u);
    EXPECT_THROW(d4.at("q"), PreconditionError);

    auto const p = groups::direct_product(groups::dihedral(4), groups::dihedral(4, "t", "u"));
    EXPECT_EQ(p.mul(p.at("s"), p.at("u")), p.at("su"));
    EXPECT_EQ(p.order(), 64u);

    auto const s4 = groups::symmetric(4);
    EXPECT_EQ(s4.name(0), "[1234]");
    // (ab)(i) = a(b(i))
    auto const ab = s4.mul(s4.at("[2341]"), s4.at("[2134]"));
    EXPECT_EQ(s4.name(ab), "[3241]");
  }

  TEST(Group, SemidirectProduct) {
    std::vector<Elem> inv(15), id(15);
    for (Elem i = 0; i < 15; ++i) {
      inv[i] = (15 - i) % 15;
      id[i]  = i;
    }
    auto const v = groups::direct_product(groups::cyclic(2, "y"), groups::cyclic(2, "z"));
    auto const g = groups::semidirect_product(groups::cyclic(15, "x"), v, {id, inv, inv, id});
    ASSERT_EQ(g.order(), 60u);
    Elem const x = g.at("x"), y = g.at("y"), z = g.at("z");
    EXPECT_EQ(g.mul(g.mul(y, x), y), g.inv(x));
    EXPECT_EQ(g.mul(g.mul(z, x), z), g.inv(x));
    EXPECT_EQ(g.mul(y, z), g.mul(z, y));
    EXPECT_EQ(g.name(59), "x^14yz");
    EXPECT_FALSE(g.is_abelian());
    // A non-automorphism is refused.
    std::vector<Elem> bad(15, 0);
    EXPECT_THROW(groups::semidirect_product(groups::cyclic(15), v, {id, bad, bad, id}),
                 PreconditionError);
  }

  TEST(Group, TableValidation) {
    // Not associative: a loop of order 5 with identity 0 and unique inverses.
    std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                              3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    EXPECT_THROW(FiniteGroup::from_table(5, loop, {"e", "a", "b", "c", "d"}), PreconditionError);
    EXPECT_THROW(FiniteGroup::from_table(2, {1, 0, 0, 1}, {"a", "b"}), PreconditionError);
    EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 0}, {"e", "e"}), PreconditionError);
    EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 2}, {"e", "a"}), PreconditionError);
    EXPECT_NO_THROW(FiniteGroup::from_table(2, {0, 1, 1, 0}, {"e", "a"}));
  }

  TEST(Group, CoordinatesRoundTrip) {
    auto const g = groups::direct_product(groups::cyclic(8), groups::symmetric(4));
    for (Elem x = 0; x < g.order(); ++x) {
      auto const c = g.coordinates(x);
      ASSERT_EQ(c.size(), 2u);
      EXPECT_EQ(g.from_coordinates(c), x);
      // index i_0 + o_0 i_1
      EXPECT_EQ(x, c[0] + 8 * c[1]);
    }
  }

  TEST(Group, PermutationRank) {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t const n    = 1 + rng.below(7);
      std::size_t       fact = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        fact *= i;
      }
      auto const rank = static_cast<Elem>(rng.below(fact));
      auto const p    = groups::permutation_unrank(n, rank);
      EXPECT_EQ(groups::permutation_rank(p), rank);
    }
  }

  TEST(Group, NormalityAndCenterAgreeWithOracle) {
    for (auto const& g : catalog()) {
      auto const t = oracle::table_of(g);
      auto const op = [&](Elem a, Elem b) { return t.op(a, b); };
      for (auto const& h : enumerate_subgroups(g)) {
        std::vector<Elem> m(h.members().begin(), h.members().end());
        EXPECT_EQ(is_normal(g, h), oracle::is_normal(t.n, op, m));
      }
      std::vector<Elem> z;
      for (Elem a = 0; a < t.n; ++a) {
        bool central = true;
        for (Elem b = 0; b < t.n; ++b) {
          central = central && t.op(a, b) == t.op(b, a);
        }
        if (central) {
          z.push_back(a);
        }
      }
      auto const c = center(g);
      EXPECT_EQ(std::vector<Elem>(c.members().begin(), c.members().end()), z);
    }
  }

  TEST(Group, CommutatorConditionMatchesBruteForce) {
    auto const  g = groups::symmetric(4);
    auto const  t = oracle::table_of(g);
    auto const  subs = enumerate_subgroups(g);
    oracle::Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      auto const&       h = subs[rng.below(subs.size())];
      std::vector<Elem> s;
      for (std::size_t i = 0, k = rng.below(4); i < k; ++i) {
        s.push_back(static_cast<Elem>(rng.below(g.order())));
      }
      std::vector<Elem> m(h.members().begin(), h.members().end());
      EXPECT_EQ(commutator_condition(g, s, h), oracle::commutators_in(t, s, m));
    }
  }

  TEST(Group, CosetSpace) {
    auto const g  = groups::dihedral(4);
    std::array<Elem, 1> gen{g.at("rs")};
    auto const h  = Subgroup::generated(g, gen);
    auto const cs = coset_space(g, h);
    EXPECT_EQ(cs.size(), 4u);
    for (Elem x = 0; x < g.order(); ++x) {
      Elem const rep = cs.representatives[cs.coset_of[x]];
      EXPECT_TRUE(h.contains(g.mul(g.inv(rep), x)));
      EXPECT_LE(rep, x);
    }
  }

  TEST(Group, SubgroupValidation) {
    auto const g = groups::dihedral(4);
    EXPECT_THROW(Subgroup::from_members(g, {0, 1}), PreconditionError);
    EXPECT_THROW(Subgroup::from_members(g, {1, 3}), PreconditionError);
    EXPECT_EQ(Subgroup::from_members(g, {0, 2}).order(), 2u);
    EXPECT_THROW(enumerate_subgroups(groups::symmetric(4), EnumerationLimits{3, 0}),
                 PreconditionError);
    // Order filter: only subgroups of order dividing 4.
    for (auto const& h : enumerate_subgroups(groups::symmetric(4), EnumerationLimits{1'000'000, 4})) {
      EXPECT_EQ(4 % h.order(), 0u);
    }
  }

  TEST(Group, RandomAssociativityOfProducts) {
    auto const  g = groups::direct_product(groups::dihedral(5), groups::symmetric(3));
    oracle::Rng rng(3);
    for (int trial = 0; trial < 5000; ++trial) {
      auto const a = static_cast<Elem>(rng.below(g.order()));
      auto const b = static_cast<Elem>(rng.below(g.order()));
      auto const c = static_cast<Elem>(rng.below(g.order()));
      ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
      ASSERT_EQ(g.mul(a, g.inv(a)), 0u);
    }
  }

}  // namespace skb
