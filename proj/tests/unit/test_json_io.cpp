#include <algorithm>  // for equal
#include <string>     // for string
#include <vector>     // for vector

#include <gtest/gtest.h>

#include "skbrace/error.hpp"
#include "skbrace/json_io.hpp"

namespace skb {
  namespace {
    using io::json;

    GroupMap d4_psi() {
      auto const                               g = groups::dihedral(4);
      std::vector<std::pair<Elem, Elem>> const a{{g.at("r"), g.at("rs")}, {g.at("s"), 0}};
      return make_map(g, g, a);
    }

    // to_json(from_json(to_json(x))) is byte-identical to to_json(x).
    template <class T, class F>
    void expect_round_trip(T const& x, F const& from) {
      auto const once = io::to_json(x);
      auto const back = from(json::parse(io::canonical(once)));
      EXPECT_EQ(io::canonical(io::to_json(back)), io::canonical(once));
    }
  }  // namespace

  TEST(JsonIo, CanonicalSortsKeys) {
    json a = json::parse(R"({"b":1,"a":[2,{"d":3,"c":4}]})");
    EXPECT_EQ(io::canonical(a), R"({"a":[2,{"c":4,"d":3}],"b":1})");
  }

  TEST(JsonIo, GroupRoundTrip) {
    for (auto const& g : {groups::dihedral(4), groups::symmetric(4), groups::cyclic(1),
                          groups::direct_product(groups::cyclic(8), groups::symmetric(3))}) {
      auto const back = io::group_from_json(io::to_json(g));
      EXPECT_EQ(back.order(), g.order());
      EXPECT_TRUE(std::equal(back.table().begin(), back.table().end(), g.table().begin()));
      for (Elem x = 0; x < g.order(); ++x) {
        EXPECT_EQ(back.name(x), g.name(x));
      }
      expect_round_trip(g, [](json const& j) { return io::group_from_json(j); });
    }
  }

  TEST(JsonIo, TrivialGroupExport) {
    auto const j = io::to_json(groups::cyclic(1));
    EXPECT_EQ(j.at("order"), 1);
    EXPECT_EQ(j.at("identity"), 0);
    EXPECT_EQ(j.at("mul"), json::parse("[[0]]"));
  }

  TEST(JsonIo, GroupSpecs) {
    auto const g = io::build_group(json::parse(R"({"kind":"dihedral","n":4})"));
    EXPECT_EQ(g.order(), 8u);
    auto const p = io::build_group(json::parse(
        R"({"kind":"product","factors":[{"kind":"cyclic","n":8,"symbol":"g"},{"kind":"symmetric","n":4}]})"));
    EXPECT_EQ(p.order(), 192u);
    auto const spec = io::parse_group_spec(json::parse(R"({"kind":"cyclic","n":5})"));
    EXPECT_EQ(io::canonical(io::to_json(io::parse_group_spec(io::to_json(spec)))),
              io::canonical(io::to_json(spec)));
    EXPECT_THROW(io::build_group(json::parse(R"({"kind":"nope"})")), PreconditionError);
    EXPECT_THROW(io::build_group(json::parse(R"({"kind":"cyclic"})")), PreconditionError);
  }

  TEST(JsonIo, MapsAndSubgroups) {
    auto const psi = d4_psi();
    auto const g   = psi.domain();
    auto const viaspec = io::parse_map_spec(
        json::parse(R"({"group":{"kind":"dihedral","n":4},"images":{"r":"rs","s":"e"}})"));
    EXPECT_EQ(viaspec, psi);
    EXPECT_EQ(io::map_from_json(io::to_json(psi)), psi);
    expect_round_trip(psi, [](json const& j) { return io::map_from_json(j); });
    auto const h = io::parse_subgroup_list(g, "r^2,s");
    EXPECT_EQ(h.order(), 4u);
    EXPECT_EQ(io::subgroup_from_json(g, io::to_json(h)), h);
    EXPECT_THROW(io::parse_subgroup_list(g, "r,s,q"), PreconditionError);
    EXPECT_THROW(io::parse_map_spec(json::parse(
                     R"({"group":{"kind":"dihedral","n":4},"images":{"r":"s","s":"r"}})")),
                 PreconditionError);
  }

  TEST(JsonIo, TablesVerdictsBracoidsSolutions) {
    auto const psi = d4_psi();
    auto const g   = psi.domain();
    expect_round_trip(circle_table(g, psi), [](json const& j) { return io::optable_from_json(j); });
    IdealClassifier cls(psi);
    auto const      v = cls.classify(fixed_subgroup(psi));
    expect_round_trip(v, [&](json const& j) { return io::verdict_from_json(g, j); });
    auto const b = bracoid_from_c1(psi, fixed_subgroup(psi));
    expect_round_trip(b, [](json const& j) { return io::bracoid_from_json(j); });
    expect_round_trip(b.provenance, [](json const& j) { return io::provenance_from_json(j); });
    auto const s = build_ybe_idempotent(psi);
    expect_round_trip(s, [](json const& j) { return io::ybe_from_json(j); });
    EXPECT_TRUE(io::ybe_from_json(io::to_json(s)).same_map(s));
  }

  TEST(JsonIo, ReportsAreDeterministic) {
    auto const psi = d4_psi();
    auto const s   = build_ybe_idempotent(psi);
    EXPECT_EQ(io::canonical(io::to_json(verify_ybe(s))), io::canonical(io::to_json(verify_ybe(s))));
    auto const r = io::to_json(verify_ybe(s));
    EXPECT_EQ(r.at("holds"), true);
  }

  TEST(JsonIo, MalformedInputIsAPreconditionError) {
    EXPECT_THROW(io::group_from_json(json::parse(R"({"order":2})")), PreconditionError);
    EXPECT_THROW(io::read_file("/nonexistent/file.json"), PreconditionError);
    EXPECT_THROW(io::ybe_from_json(json::parse(R"({"order":2,"lambda":[0]})")), PreconditionError);
  }

}  // namespace skb
