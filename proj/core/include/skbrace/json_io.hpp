#ifndef SKBRACE_JSON_IO_HPP_
#define SKBRACE_JSON_IO_HPP_

#include <optional>  // for optional
#include <string>    // for string

#include <nlohmann/json.hpp>

#include "skbrace/brace.hpp"
#include "skbrace/bracoid.hpp"
#include "skbrace/group.hpp"
#include "skbrace/hom_maps.hpp"
#include "skbrace/ideals.hpp"
#include "skbrace/provenance.hpp"
#include "skbrace/ybe.hpp"

namespace skb::io {

  using json = nlohmann::json;

  //! Compact dump; object keys are sorted, so equal values give equal text.
  std::string canonical(json const& j);

  //! Reads and parses a JSON file; PreconditionError on I/O or syntax errors.
  json read_file(std::string const& path);

  // Group specs and groups.

  GroupSpec parse_group_spec(json const& j);
  json      to_json(GroupSpec const& spec);
  //! parse_group_spec followed by groups::build.
  FiniteGroup build_group(json const& spec, GroupOptions const& opts = {});

  //! {"order","identity","mul","inv","names","generators"}.
  json        to_json(FiniteGroup const& g);
  FiniteGroup group_from_json(json const& j);

  //! Sorted member indices.
  json     to_json(Subgroup const& h);
  Subgroup subgroup_from_json(FiniteGroup const& g, json const& j);

  //! Members given by element names, separated by commas (indices allowed).
  Subgroup parse_subgroup_list(FiniteGroup const& g, std::string const& list);

  // Maps.

  //! Map spec: {"group": spec?, "codomain": spec?, "images": {name: name}}
  //! or {"group": spec?, "codomain": spec?, "image_array": [...]}.  The
  //! domain defaults to `group` when the spec has none; the codomain
  //! defaults to the domain.
  GroupMap parse_map_spec(json const&                       j,
                          std::optional<FiniteGroup> const& group = std::nullopt,
                          GroupOptions const&               opts  = {});

  //! {"domain","codomain","image","flags","builder"}.
  json     to_json(GroupMap const& f);
  GroupMap map_from_json(json const& j);

  json to_json(MapAnalysis const& a);

  // Braces.

  //! {"label","order","table"}.
  json    to_json(OpTable const& t);
  OpTable optable_from_json(json const& j);

  //! {"holds","checked","failure"?}.
  json to_json(BraceReport const& r);

  // Ideals.

  //! {"subgroup","order","C1","C2","strong_left_ideal_of","ideal_of"}.
  json         to_json(IdealVerdict const& v);
  IdealVerdict verdict_from_json(FiniteGroup const& g, json const& j);

  json to_json(NamedSubgroups const& n);

  // Bracoids.

  json       to_json(Provenance const& p);
  Provenance provenance_from_json(json const& j);

  json    to_json(Bracoid const& b);
  Bracoid bracoid_from_json(json const& j);

  json to_json(BracoidReport const& r);

  // YBE.

  json        to_json(YbeSolution const& s);
  YbeSolution ybe_from_json(json const& j);

  json to_json(NondegeneracyReport const& r);
  json to_json(YbeReport const& r);

}  // namespace skb::io

#endif  // SKBRACE_JSON_IO_HPP_
