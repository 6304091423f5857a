#ifndef SKBRACE_CORPUS_HPP_
#define SKBRACE_CORPUS_HPP_

#include <filesystem>  // for path
#include <string>      // for string
#include <vector>      // for vector

#include "skbrace/json_io.hpp"
#include "skbrace/sweep.hpp"

namespace skb::corpus {

  using io::json;

  //! A worked example: a group, a map, and the values the scenario of the
  //! same name is expected to produce.
  struct Fixture {
    std::string name;
    std::string description;
    //! Group spec with file references resolved.
    json group;
    //! Map spec with file references resolved.
    json map;
    //! Check name -> expected value.
    json expected;
    //! Check name -> "published" (quoted from the literature) or "computed"
    //! (derived by an independent computation and frozen).
    json sources;
    //! Sampling is refused for this fixture.
    bool exhaustive_required = false;
  };

  //! $SKBRACE_CORPUS if set, else the directory compiled into the library.
  std::filesystem::path default_dir();

  //! Fixture names (file stems under fixtures/), sorted.
  std::vector<std::string> fixture_names(std::filesystem::path const& dir = default_dir());

  //! Reads fixtures/<name>.json, validates it against fixture.schema.json
  //! and resolves "groups/..." and "maps/..." references.
  Fixture load_fixture(std::string const& name, std::filesystem::path const& dir = default_dir());

  struct CheckResult {
    std::string name;
    bool        passed = false;
    json        expected;
    json        actual;
    std::string source;
  };

  struct FixtureResult {
    std::string              name;
    bool                     passed = false;
    std::vector<CheckResult> checks;
    double                   seconds = 0;
  };

  //! Runs the scenario named by the fixture and compares every expected
  //! value.  Expected values of the form {"generated_by": [names]} match an
  //! actual member-name list when both describe the same subgroup.
  FixtureResult run_fixture(Fixture const& f, SweepOptions const& sweep = default_sweep());

  //! Deterministic: no timing information.
  json to_json(FixtureResult const& r);

}  // namespace skb::corpus

#endif  // SKBRACE_CORPUS_HPP_
