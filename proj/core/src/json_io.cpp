#include "skbrace/json_io.hpp"

#include <fstream>  // for ifstream
#include <sstream>  // for stringstream

#include "skbrace/error.hpp"

namespace skb::io {

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw PreconditionError(std::string("JSON: missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    template <typename T>
    T get(json const& j, char const* key) {
      try {
        return field(j, key).get<T>();
      } catch (json::exception const& e) {
        throw PreconditionError(std::string("JSON: field \"") + key + "\": " + e.what());
      }
    }

    json square(std::span<Elem const> flat, std::size_t n) {
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(std::vector<Elem>(flat.begin() + i * n, flat.begin() + (i + 1) * n));
      }
      return rows;
    }

    std::vector<Elem> flatten(json const& rows, std::size_t n, char const* what) {
      std::vector<Elem> flat;
      if (!rows.is_array() || rows.size() != n) {
        throw PreconditionError(std::string("JSON: ") + what + " must have "
                                + std::to_string(n) + " rows");
      }
      for (auto const& row : rows) {
        auto r = row.get<std::vector<Elem>>();
        if (r.size() != n) {
          throw PreconditionError(std::string("JSON: ") + what + " rows must have length "
                                  + std::to_string(n));
        }
        flat.insert(flat.end(), r.begin(), r.end());
      }
      return flat;
    }

    Elem element(FiniteGroup const& g, json const& v) {
      if (v.is_number_unsigned()) {
        auto x = v.get<std::size_t>();
        if (x >= g.order()) {
          throw PreconditionError("element index " + std::to_string(x) + " out of range");
        }
        return static_cast<Elem>(x);
      }
      if (v.is_string()) {
        return g.at(v.get<std::string>());
      }
      throw PreconditionError("JSON: elements are names or indices, got " + v.dump());
    }

    json flags_json(MapFlags const& f) {
      json j{{"is_hom", f.is_hom}, {"abelian_image", f.abelian_image}};
      if (f.idempotent) {
        j["idempotent"] = *f.idempotent;
      }
      if (f.fixed_point_free) {
        j["fixed_point_free"] = *f.fixed_point_free;
      }
      return j;
    }

    json witness(std::optional<std::array<Elem, 3>> const& w) {
      return w ? json(std::vector<Elem>(w->begin(), w->end())) : json(nullptr);
    }
  }  // namespace

  std::string canonical(json const& j) {
    return j.dump();
  }

  json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw PreconditionError("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw PreconditionError(path + ": " + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  GroupSpec parse_group_spec(json const& j) {
    if (!j.is_object()) {
      throw PreconditionError("group spec must be a JSON object");
    }
    using K = GroupSpec::Kind;
    GroupSpec         s;
    auto const        kind = get<std::string>(j, "kind");
    if (j.contains("symbols")) {
      s.symbols = get<std::vector<std::string>>(j, "symbols");
    }
    if (j.contains("names")) {
      s.names = get<std::vector<std::string>>(j, "names");
    }
    if (j.contains("generators")) {
      s.generators = get<std::vector<Elem>>(j, "generators");
    }
    if (kind == "cyclic" || kind == "dihedral" || kind == "symmetric") {
      s.kind = kind == "cyclic" ? K::cyclic : kind == "dihedral" ? K::dihedral : K::symmetric;
      s.n    = get<std::size_t>(j, "n");
    } else if (kind == "product") {
      s.kind = K::product;
      for (auto const& f : field(j, "factors")) {
        s.factors.push_back(parse_group_spec(f));
      }
    } else if (kind == "semidirect") {
      s.kind = K::semidirect;
      s.factors.push_back(parse_group_spec(field(j, "base")));
      s.factors.push_back(parse_group_spec(field(j, "acting")));
      s.action = get<std::vector<std::vector<Elem>>>(j, "action");
    } else if (kind == "table") {
      s.kind = K::table;
      s.mul  = get<std::vector<std::vector<Elem>>>(j, "mul");
    } else {
      throw PreconditionError("unknown group kind \"" + kind + "\"");
    }
    return s;
  }

  json to_json(GroupSpec const& s) {
    using K = GroupSpec::Kind;
    json j;
    switch (s.kind) {
      case K::cyclic:
        j = {{"kind", "cyclic"}, {"n", s.n}};
        break;
      case K::dihedral:
        j = {{"kind", "dihedral"}, {"n", s.n}};
        break;
      case K::symmetric:
        j = {{"kind", "symmetric"}, {"n", s.n}};
        break;
      case K::product:
        j = {{"kind", "product"}, {"factors", json::array()}};
        for (auto const& f : s.factors) {
          j["factors"].push_back(to_json(f));
        }
        break;
      case K::semidirect:
        j = {{"kind", "semidirect"},
             {"base", to_json(s.factors.at(0))},
             {"acting", to_json(s.factors.at(1))},
             {"action", s.action}};
        break;
      case K::table:
        j = {{"kind", "table"}, {"mul", s.mul}};
        break;
    }
    if (!s.symbols.empty()) {
      j["symbols"] = s.symbols;
    }
    if (!s.names.empty()) {
      j["names"] = s.names;
    }
    if (!s.generators.empty()) {
      j["generators"] = s.generators;
    }
    return j;
  }

  FiniteGroup build_group(json const& spec, GroupOptions const& opts) {
    return groups::build(parse_group_spec(spec), opts);
  }

  json to_json(FiniteGroup const& g) {
    std::vector<Elem> inv(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      inv[x] = g.inv(x);
    }
    return {{"order", g.order()},
            {"identity", 0},
            {"mul", square(g.table(), g.order())},
            {"inv", inv},
            {"names", std::vector<std::string>(g.names().begin(), g.names().end())},
            {"generators", std::vector<Elem>(g.generators().begin(), g.generators().end())}};
  }

  FiniteGroup group_from_json(json const& j) {
    auto const n = get<std::size_t>(j, "order");
    auto       g = FiniteGroup::from_table(n,
                                     flatten(field(j, "mul"), n, "mul"),
                                     get<std::vector<std::string>>(j, "names"),
                                     get<std::vector<Elem>>(j, "generators"));
    if (j.contains("inv")) {
      auto inv = get<std::vector<Elem>>(j, "inv");
      for (Elem x = 0; x < n; ++x) {
        if (inv.size() != n || inv[x] != g.inv(x)) {
          throw PreconditionError("JSON: \"inv\" does not match the table");
        }
      }
    }
    return g;
  }

  json to_json(Subgroup const& h) {
    return std::vector<Elem>(h.members().begin(), h.members().end());
  }

  Subgroup subgroup_from_json(FiniteGroup const& g, json const& j) {
    if (!j.is_array()) {
      throw PreconditionError("JSON: a subgroup is an array of elements");
    }
    std::vector<Elem> m;
    for (auto const& v : j) {
      m.push_back(element(g, v));
    }
    return Subgroup::from_members(g, std::move(m));
  }

  Subgroup parse_subgroup_list(FiniteGroup const& g, std::string const& list) {
    std::vector<Elem> gens;
    std::stringstream ss(list);
    for (std::string tok; std::getline(ss, tok, ',');) {
      auto const b = tok.find_first_not_of(" \t");
      auto const e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) {
        continue;
      }
      gens.push_back(g.at(tok.substr(b, e - b + 1)));
    }
    return Subgroup::generated(g, gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  GroupMap parse_map_spec(json const&                       j,
                          std::optional<FiniteGroup> const& group,
                          GroupOptions const&               opts) {
    if (!j.is_object()) {
      throw PreconditionError("map spec must be a JSON object");
    }
    if (j.contains("swap")) {
      auto const& sw    = field(j, "swap");
      auto        alpha = parse_map_spec(field(sw, "alpha"), std::nullopt, opts);
      auto        beta  = parse_map_spec(field(sw, "beta"), alpha.codomain(), opts);
      return product_swap_map(alpha, beta);
    }
    if (j.contains("chain")) {
      std::vector<GroupMap> maps;
      for (auto const& m : field(j, "chain")) {
        maps.push_back(parse_map_spec(m, std::nullopt, opts));
      }
      return cyclic_chain_map(maps);
    }
    if (j.contains("left_regular")) {
      return left_regular_map(build_group(field(j, "left_regular"), opts));
    }
    FiniteGroup domain = j.contains("group") ? build_group(j.at("group"), opts)
                         : group             ? *group
                                             : throw PreconditionError(
                                                   "map spec has no \"group\" and none was given");
    if (group && j.contains("group") && !(domain == *group)) {
      throw PreconditionError("map spec group differs from the given group");
    }
    FiniteGroup codomain = j.contains("codomain") ? build_group(j.at("codomain"), opts) : domain;
    if (j.contains("trivial") && j.at("trivial").get<bool>()) {
      return trivial_map(domain, codomain);
    }
    if (j.contains("identity") && j.at("identity").get<bool>()) {
      return identity_map(domain);
    }
    if (j.contains("image_array")) {
      std::vector<Elem> im;
      for (auto const& v : field(j, "image_array")) {
        im.push_back(element(codomain, v));
      }
      if (im.size() != domain.order()) {
        throw PreconditionError("image_array must have one entry per element");
      }
      return make_map(domain, codomain, std::move(im));
    }
    auto const& images = field(j, "images");
    if (!images.is_object()) {
      throw PreconditionError("\"images\" must map element names to element names");
    }
    std::vector<std::pair<Elem, Elem>> assignment;
    for (auto const& [k, v] : images.items()) {
      assignment.emplace_back(domain.at(k), element(codomain, v));
    }
    return make_map(domain, codomain, std::span<std::pair<Elem, Elem> const>(assignment));
  }

  json to_json(GroupMap const& f) {
    return {{"domain", to_json(f.domain())},
            {"codomain", to_json(f.codomain())},
            {"image", std::vector<Elem>(f.image().begin(), f.image().end())},
            {"flags", flags_json(f.flags())},
            {"builder", f.builder()}};
  }

  GroupMap map_from_json(json const& j) {
    auto d = group_from_json(field(j, "domain"));
    auto c = group_from_json(field(j, "codomain"));
    auto f = GroupMap::tabulate(d, c, get<std::vector<Elem>>(j, "image"),
                                get<std::string>(j, "builder"));
    if (j.contains("flags") && flags_json(f.flags()) != j.at("flags")) {
      throw PreconditionError("JSON: map flags do not match the image");
    }
    return f;
  }

  json to_json(MapAnalysis const& a) {
    json j{{"kernel", to_json(a.kernel)}, {"image", to_json(a.image)}};
    if (a.fix) {
      j["fix"] = to_json(*a.fix);
    }
    if (a.idempotent) {
      j["idempotent"] = *a.idempotent;
    }
    if (a.fixed_point_free) {
      j["fixed_point_free"] = *a.fixed_point_free;
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Braces
  ////////////////////////////////////////////////////////////////////////

  json to_json(OpTable const& t) {
    return {{"label", t.label()}, {"order", t.order()}, {"table", square(t.table(), t.order())}};
  }

  OpTable optable_from_json(json const& j) {
    auto const n = get<std::size_t>(j, "order");
    return OpTable::group(n, flatten(field(j, "table"), n, "table"), get<std::string>(j, "label"));
  }

  json to_json(BraceReport const& r) {
    json j{{"holds", r.holds}, {"checked", r.sampled ? "sampled" : "exhaustive"}};
    if (r.failure) {
      j["failure"] = witness(r.failure);
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  json to_json(IdealVerdict const& v) {
    json sli = json::array(), ideal = json::array();
    for (BraceKind k : v.strong_left_ideal_of) {
      sli.push_back(std::string(label(k)));
    }
    for (BraceKind k : v.ideal_of) {
      ideal.push_back(std::string(label(k)));
    }
    return {{"subgroup", to_json(v.subgroup)},
            {"order", v.subgroup.order()},
            {"C1", v.c1},
            {"C2", v.c2},
            {"strong_left_ideal_of", sli},
            {"ideal_of", ideal}};
  }

  IdealVerdict verdict_from_json(FiniteGroup const& g, json const& j) {
    IdealVerdict v{subgroup_from_json(g, field(j, "subgroup")), get<bool>(j, "C1"),
                   get<bool>(j, "C2"), {}, {}};
    auto kinds = [](json const& arr, std::vector<BraceKind>& out) {
      for (auto const& s : arr) {
        auto k = parse_brace_kind(s.get<std::string>());
        if (!k) {
          throw PreconditionError("unknown brace label " + s.dump());
        }
        out.push_back(*k);
      }
    };
    kinds(field(j, "strong_left_ideal_of"), v.strong_left_ideal_of);
    kinds(field(j, "ideal_of"), v.ideal_of);
    return v;
  }

  json to_json(NamedSubgroups const& n) {
    return {{"ker", to_json(n.ker)}, {"fix", to_json(n.fix)}, {"h_hat", to_json(n.h_hat)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Bracoids
  ////////////////////////////////////////////////////////////////////////

  json to_json(Provenance const& p) {
    json inputs = json::object();
    for (auto const& [k, v] : p.inputs) {
      inputs[k] = v;
    }
    return {{"construction", p.construction}, {"inputs", inputs}};
  }

  Provenance provenance_from_json(json const& j) {
    Provenance p{get<std::string>(j, "construction"), {}};
    for (auto const& [k, v] : field(j, "inputs").items()) {
      p.with(k, v.get<std::string>());
    }
    return p;
  }

  json to_json(Bracoid const& b) {
    json j{{"acting", to_json(b.acting)},
           {"target", to_json(b.target)},
           {"action", json::array()},
           {"provenance", to_json(b.provenance)},
           {"acting_names", b.acting_names},
           {"target_names", b.target_names},
           {"target_embedding", b.target_embedding}};
    for (Elem g = 0; g < b.acting_order(); ++g) {
      std::vector<Elem> row(b.target_order());
      for (Elem eta = 0; eta < b.target_order(); ++eta) {
        row[eta] = b.act(g, eta);
      }
      j["action"].push_back(row);
    }
    if (b.brace_reducible) {
      j["brace_reducible"] = *b.brace_reducible;
    }
    return j;
  }

  Bracoid bracoid_from_json(json const& j) {
    Bracoid b{optable_from_json(field(j, "acting")),
              optable_from_json(field(j, "target")),
              {},
              provenance_from_json(field(j, "provenance")),
              get<std::vector<std::string>>(j, "acting_names"),
              get<std::vector<std::string>>(j, "target_names"),
              get<std::vector<Elem>>(j, "target_embedding"),
              std::nullopt};
    auto rows = get<std::vector<std::vector<Elem>>>(j, "action");
    if (rows.size() != b.acting_order()) {
      throw PreconditionError("JSON: action needs one row per acting element");
    }
    for (auto const& r : rows) {
      if (r.size() != b.target_order()) {
        throw PreconditionError("JSON: action rows need one entry per target element");
      }
      b.action.insert(b.action.end(), r.begin(), r.end());
    }
    if (j.contains("brace_reducible")) {
      b.brace_reducible = get<bool>(j, "brace_reducible");
    }
    return b;
  }

  json to_json(BracoidReport const& r) {
    json j{{"action_valid", r.action_valid},
           {"transitive", r.transitive},
           {"relation_holds", r.relation_holds},
           {"checked", r.sampled ? "sampled" : "exhaustive"}};
    if (r.first_failure) {
      j["failure"] = {{"kind", r.first_failure->kind}, {"witness", r.first_failure->witness}};
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // YBE
  ////////////////////////////////////////////////////////////////////////

  json to_json(YbeSolution const& s) {
    return {{"order", s.order},
            {"lambda", square(s.lambda, s.order)},
            {"rho", square(s.rho, s.order)},
            {"provenance", to_json(s.provenance)}};
  }

  YbeSolution ybe_from_json(json const& j) {
    auto const n = get<std::size_t>(j, "order");
    YbeSolution s{n, flatten(field(j, "lambda"), n, "lambda"), flatten(field(j, "rho"), n, "rho"),
                  provenance_from_json(field(j, "provenance"))};
    for (Elem x : s.lambda) {
      if (x >= n) {
        throw PreconditionError("JSON: lambda entry out of range");
      }
    }
    for (Elem x : s.rho) {
      if (x >= n) {
        throw PreconditionError("JSON: rho entry out of range");
      }
    }
    return s;
  }

  json to_json(NondegeneracyReport const& r) {
    json j{{"left", r.left}, {"right", r.right}};
    if (r.left_witness) {
      j["left_witness"] = witness(r.left_witness);
    }
    if (r.right_witness) {
      j["right_witness"] = witness(r.right_witness);
    }
    return j;
  }

  json to_json(YbeReport const& r) {
    json j{{"holds", r.holds},
           {"checked", r.sampled ? "sampled" : "exhaustive"},
           {"nondegeneracy", to_json(r.nondegeneracy)}};
    if (r.witness) {
      j["failure"] = witness(r.witness);
    }
    return j;
  }

}  // namespace skb::io
