#include "cli.hpp"

#include <algorithm>  // for reverse
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <string>     // for string, stoul

#include "CLI11.hpp"

#include "skbrace/corpus.hpp"
#include "skbrace/error.hpp"
#include "skbrace/json_io.hpp"

namespace skb::cli {

  using io::json;

  namespace {
    struct Globals {
      bool                         pretty = false;
      std::optional<std::uint64_t> seed;
      unsigned                     threads   = 0;
      std::size_t                  max_order = 64;
      std::optional<std::size_t>   sample;
      std::string                  corpus_dir;
    };

    // Inline JSON if the argument starts like a document, else a file path.
    json load_json_arg(std::string const& arg) {
      auto const first = arg.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
          return json::parse(arg);
        } catch (json::parse_error const& e) {
          throw PreconditionError(std::string("inline JSON: ") + e.what());
        }
      }
      return io::read_file(arg);
    }

    void emit(std::ostream& out, json const& j, Globals const& g) {
      out << (g.pretty ? j.dump(2) : io::canonical(j)) << '\n';
    }

    void error(std::ostream& err, std::string_view kind, std::string const& msg) {
      err << io::canonical({{"error", {{"kind", kind}, {"message", msg}}}}) << '\n';
    }

    // Comma-separated element names, or one of ker, fix, h_hat.
    Subgroup resolve_subgroup(GroupMap const& psi, std::string const& text) {
      if (text == "ker" || text == "fix" || text == "h_hat") {
        auto const n = named_subgroups(psi);
        return text == "ker" ? n.ker : text == "fix" ? n.fix : n.h_hat;
      }
      return io::parse_subgroup_list(psi.domain(), text);
    }

    struct Inputs {
      FiniteGroup group;
      json        map_spec;
      GroupMap    psi;
    };

    Inputs load_inputs(std::string const& group_arg, std::string const& map_arg) {
      auto       group = io::build_group(load_json_arg(group_arg));
      auto       spec  = load_json_arg(map_arg);
      auto       psi   = io::parse_map_spec(spec, group);
      if (!(psi.domain() == group)) {
        throw PreconditionError("the map is not defined on the given group");
      }
      if (!psi.is_endomorphism()) {
        throw PreconditionError("the map must be an endomorphism of the group");
      }
      return {std::move(group), std::move(spec), std::move(psi)};
    }

    Bracoid build_bracoid(GroupMap const&    psi,
                          std::string const& via,
                          std::string const& subgroup,
                          bool               opposite,
                          bool               reduce) {
      Bracoid b = [&] {
        if (via.rfind("tower:", 0) == 0) {
          std::size_t pos = 0;
          auto const  arg = via.substr(6);
          auto const  n   = arg.empty() ? 0 : std::stoul(arg, &pos);
          if (arg.empty() || pos != arg.size()) {
            throw PreconditionError("--via tower:n needs a non-negative integer n");
          }
          return phi_tower_bracoid(psi, n);
        }
        if (via != "C1" && via != "C2") {
          throw PreconditionError("--via must be C1, C2 or tower:n");
        }
        if (subgroup.empty()) {
          throw PreconditionError("--via " + via + " needs --subgroup");
        }
        auto const h = resolve_subgroup(psi, subgroup);
        return via == "C1" ? bracoid_from_c1(psi, h, opposite) : bracoid_from_c2(psi, h, opposite);
      }();
      return reduce ? reduce_bracoid(b) : b;
    }

    json with_report(YbeSolution const& s, bool verify) {
      json j{{"solution", io::to_json(s)}};
      if (verify) {
        j["report"] = io::to_json(verify_ybe(s));
      }
      return j;
    }

    int dispatch(CLI::App& app, std::vector<std::string> args, std::ostream& out, Globals& g) {
      // group build
      auto*       group_cmd   = app.add_subcommand("group", "Finite groups");
      auto*       group_build = group_cmd->add_subcommand("build", "Build a group from a spec");
      std::string spec_arg;
      group_build->add_option("spec", spec_arg, "Group spec (file or inline JSON)")->required();
      group_cmd->require_subcommand(1);

      // abmaps enumerate
      auto* abmaps      = app.add_subcommand("abmaps", "Maps with abelian image");
      auto* abmaps_enum = abmaps->add_subcommand("enumerate", "Enumerate Ab(G) or Ab(G, G')");
      std::string group_arg, codomain_arg, map_arg;
      abmaps_enum->add_option("group", group_arg, "Group spec")->required();
      abmaps_enum->add_option("--codomain", codomain_arg, "Codomain spec (default: the group)");
      abmaps->require_subcommand(1);

      // brace build
      auto*       brace       = app.add_subcommand("brace", "Skew braces from a map");
      auto*       brace_build = brace->add_subcommand("build", "The braces of psi");
      std::size_t block       = 0;
      brace_build->add_option("group", group_arg)->required();
      brace_build->add_option("map", map_arg)->required();
      brace_build->add_option("--block", block, "Build the brace block o_0..o_N");
      brace->require_subcommand(1);

      // ideals classify
      auto*       ideals   = app.add_subcommand("ideals", "Strong left ideals and ideals");
      auto*       classify = ideals->add_subcommand("classify", "Classify subgroups");
      bool        all = false, named = false;
      std::string subgroup;
      classify->add_option("group", group_arg)->required();
      classify->add_option("map", map_arg)->required();
      auto* o_all   = classify->add_flag("--all", all, "Every subgroup (default)");
      auto* o_named = classify->add_flag("--named", named, "ker, fix and h_hat");
      auto* o_sub   = classify->add_option("--subgroup", subgroup, "Generators g1,g2,...");
      o_all->excludes(o_named)->excludes(o_sub);
      o_named->excludes(o_sub);
      ideals->require_subcommand(1);

      // bracoid build
      auto*       bracoid       = app.add_subcommand("bracoid", "Bracoids");
      auto*       bracoid_build = bracoid->add_subcommand("build", "Build and verify a bracoid");
      std::string via;
      bool        opposite = false, reduce = false;
      bracoid_build->add_option("group", group_arg)->required();
      bracoid_build->add_option("map", map_arg)->required();
      bracoid_build->add_option("--via", via, "C1, C2 or tower:n")->required();
      bracoid_build->add_option("--subgroup", subgroup, "Generators, or ker, fix, h_hat");
      bracoid_build->add_flag("--opposite", opposite, "Use the opposite target operation");
      bracoid_build->add_flag("--reduce", reduce, "Quotient by the kernel of the action");
      bracoid->require_subcommand(1);

      // ybe build
      auto*       ybe       = app.add_subcommand("ybe", "Set-theoretic Yang-Baxter solutions");
      auto*       ybe_build = ybe->add_subcommand("build", "Build a solution");
      std::string construction, contained;
      bool        verify = false;
      ybe_build->add_option("group", group_arg)->required();
      ybe_build->add_option("map", map_arg)->required();
      ybe_build->add_option("--construction", construction)
          ->required()
          ->check(CLI::IsMember({"idempotent", "product", "abelian-pair", "contained"}));
      ybe_build->add_flag("--verify", verify, "Check the braid relation");
      ybe_build->add_option("--via", via, "Bracoid for --construction contained")
          ->default_str("tower:1");
      ybe_build->add_option("--subgroup", subgroup, "Subgroup for --via C1/C2");
      ybe_build->add_option("--brace-subgroup", contained,
                            "Regular subgroup K (default: the first one found)");
      ybe->require_subcommand(1);

      // corpus run
      auto*       corpus_cmd = app.add_subcommand("corpus", "Worked examples");
      auto*       corpus_run = corpus_cmd->add_subcommand("run", "Run fixtures");
      std::string fixture;
      corpus_run->add_option("name", fixture, "Fixture (default: all)");
      corpus_cmd->require_subcommand(1);

      app.require_subcommand(1);
      std::reverse(args.begin(), args.end());
      app.parse(args);

      auto& sweep   = default_sweep();
      sweep         = SweepOptions{};
      sweep.threads = g.threads;
      if (g.seed) {
        sweep.seed = *g.seed;
      }
      if (g.sample) {
        sweep.force_sampling = true;
        sweep.samples        = *g.sample;
      }

      if (group_build->parsed()) {
        emit(out, io::to_json(io::build_group(load_json_arg(spec_arg))), g);
      } else if (abmaps_enum->parsed()) {
        auto const dom = io::build_group(load_json_arg(group_arg));
        auto const cod = codomain_arg.empty() ? dom : io::build_group(load_json_arg(codomain_arg));
        json       maps = json::array();
        for (auto const& f : enumerate_abelian_maps(dom, cod)) {
          json m = io::to_json(f);
          m.erase("domain");
          m.erase("codomain");
          maps.push_back(std::move(m));
        }
        emit(out, {{"count", maps.size()}, {"maps", maps}}, g);
      } else if (brace_build->parsed()) {
        auto const in   = load_inputs(group_arg, map_arg);
        auto const dot  = OpTable::of(in.group);
        auto const circ = circle_table(in.group, in.psi);
        json       reports;
        auto const add  = [&](OpTable const& a, OpTable const& m) {
          reports[a.label() + "," + m.label()] = io::to_json(verify_brace(a, m));
        };
        add(dot, circ);
        add(circ, dot);
        add(opposite_table(dot), circ);
        add(opposite_table(circ), dot);
        add(dot, opposite_table(circ));
        add(opposite_table(dot), opposite_table(circ));
        json j{{"additive", io::to_json(dot)},
               {"multiplicative", io::to_json(circ)},
               {"reports", reports}};
        if (brace_build->count("--block") > 0) {
          json tables = json::array();
          for (auto const& t : brace_block(in.psi, block)) {
            tables.push_back(io::to_json(t));
          }
          j["block"] = tables;
        }
        emit(out, j, g);
      } else if (classify->parsed()) {
        auto const in = load_inputs(group_arg, map_arg);
        if (named) {
          emit(out, io::to_json(named_subgroups(in.psi)), g);
        } else if (!subgroup.empty()) {
          emit(out, io::to_json(classify_subgroup(in.psi, resolve_subgroup(in.psi, subgroup))), g);
        } else {
          json vs = json::array();
          for (auto const& v : find_strong_left_ideals(in.psi, g.max_order)) {
            vs.push_back(io::to_json(v));
          }
          emit(out, vs, g);
        }
      } else if (bracoid_build->parsed()) {
        auto const in = load_inputs(group_arg, map_arg);
        auto const b  = build_bracoid(in.psi, via, subgroup, opposite, reduce);
        emit(out, {{"bracoid", io::to_json(b)}, {"report", io::to_json(verify_bracoid(b))}}, g);
      } else if (ybe_build->parsed()) {
        if (construction == "product") {
          auto const group = io::build_group(load_json_arg(group_arg));
          auto const spec  = load_json_arg(map_arg);
          if (!spec.contains("swap")) {
            throw PreconditionError("--construction product needs a {\"swap\": {alpha, beta}} map");
          }
          auto const alpha = io::parse_map_spec(spec.at("swap").at("alpha"));
          auto const beta  = io::parse_map_spec(spec.at("swap").at("beta"), alpha.codomain());
          auto const s     = build_ybe_product(alpha, beta);
          if (!(product_swap_map(alpha, beta).domain() == group)) {
            throw PreconditionError("the group is not the domain of the swap map");
          }
          emit(out, with_report(s, verify), g);
          return exit_code::ok;
        }
        auto const in = load_inputs(group_arg, map_arg);
        if (construction == "idempotent") {
          emit(out, with_report(build_ybe_idempotent(in.psi), verify), g);
        } else if (construction == "abelian-pair") {
          auto const [r, rp] = build_ybe_abelian_pair(in.psi);
          emit(out, {{"R", with_report(r, verify)}, {"R'", with_report(rp, verify)}}, g);
        } else {
          auto const b = build_bracoid(in.psi, via.empty() ? "tower:1" : via, subgroup, false, false);
          auto const acting = acting_group(b);
          std::optional<Subgroup> k;
          if (!contained.empty()) {
            k = io::parse_subgroup_list(acting, contained);
          } else {
            k = find_contained_brace(b);
          }
          if (!k) {
            throw PreconditionError("no subgroup of the acting group acts regularly");
          }
          json j = with_report(build_ybe_from_contained_brace(b, *k), verify);
          j["brace_subgroup"] = io::to_json(*k);
          emit(out, j, g);
        }
      } else if (corpus_run->parsed()) {
        auto const dir   = g.corpus_dir.empty() ? corpus::default_dir()
                                                : std::filesystem::path(g.corpus_dir);
        auto const names = fixture.empty() ? corpus::fixture_names(dir)
                                           : std::vector<std::string>{fixture};
        json       results = json::array();
        bool       passed  = true;
        for (auto const& n : names) {
          auto const r = corpus::run_fixture(corpus::load_fixture(n, dir));
          passed       = passed && r.passed;
          results.push_back(corpus::to_json(r));
        }
        emit(out, {{"passed", passed}, {"fixtures", results}}, g);
        return passed ? exit_code::ok : exit_code::internal;
      }
      return exit_code::ok;
    }
  }  // namespace

  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew braces, bracoids and Yang-Baxter solutions from abelian maps", "skbrace"};
    Globals  g;
    bool     json_flag = false;
    app.add_flag("--json", json_flag, "Compact canonical JSON output (default)");
    app.add_flag("--pretty", g.pretty, "Indented JSON output");
    app.add_option("--seed", g.seed, "Seed for sampled sweeps");
    app.add_option("--threads", g.threads, "Worker threads (default: $SKBRACE_THREADS or all)");
    app.add_option("--max-order", g.max_order, "Largest group for subgroup-wide searches")
        ->capture_default_str();
    app.add_option("--sample", g.sample, "Check this many random triples instead of all");
    app.add_option("--corpus-dir", g.corpus_dir, "Corpus directory");
    app.set_version_flag("--version",
                         "skbrace " SKBRACE_VERSION " (json format "
                             + std::to_string(json_format_version) + ")");
    app.fallthrough();
    try {
      return dispatch(app, args, out, g);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_code::ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_code::ok;
    } catch (CLI::CallForVersion const&) {
      out << app.version() << '\n';
      return exit_code::ok;
    } catch (CLI::ParseError const& e) {
      error(err, "usage", e.what());
      return exit_code::precondition;
    } catch (PreconditionError const& e) {
      error(err, "precondition", e.what());
      return exit_code::precondition;
    } catch (InternalError const& e) {
      error(err, "internal", e.what());
      return exit_code::internal;
    } catch (json::exception const& e) {
      error(err, "precondition", e.what());
      return exit_code::precondition;
    }
  }

}  // namespace skb::cli
