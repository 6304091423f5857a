#include "skbrace/bracoid.hpp"

#include <algorithm>  // for sort, unique, lower_bound
#include <random>     // for mt19937_64
#include <string>     // for string, to_string

#include "skbrace/error.hpp"
#include "skbrace/ideals.hpp"

namespace skb {

  namespace {
    constexpr Elem kNone = static_cast<Elem>(-1);

    // The operation t induced on the cells of `part` (cell ids 0..k-1 with
    // representatives reps); throws PreconditionError if ill defined.
    OpTable induced_table(OpTable const&           t,
                          std::vector<Elem> const& part,
                          std::vector<Elem> const& reps,
                          SweepOptions const&      sweep) {
      std::size_t const q = reps.size();
      std::size_t const n = t.order();
      std::vector<Elem> out(q * q);
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          out[i * q + j] = part[t.op(reps[i], reps[j])];
        }
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (part[t.op(x, y)] != out[part[x] * q + part[y]]) {
            throw PreconditionError("operation '" + t.label()
                                    + "' is not well defined on cosets (at "
                                    + std::to_string(x) + ", " + std::to_string(y)
                                    + ")");
          }
        }
      }
      return OpTable::group(q, std::move(out), t.label(), sweep);
    }

    std::string coset_name(FiniteGroup const& g, Elem rep, char const* sub) {
      return g.name(rep) + sub;
    }

    void require_abelian_map(GroupMap const& psi, char const* who) {
      if (!psi.is_endomorphism() || !psi.is_abelian_map()) {
        throw PreconditionError(std::string(who) + ": psi is not in Ab(G)");
      }
    }

    void require_subgroup_of(GroupMap const& psi, Subgroup const& h, char const* who) {
      if (!(h.parent() == psi.domain())) {
        throw PreconditionError(std::string(who)
                                + ": H is not a subgroup of the domain of psi");
      }
    }

    std::string members_string(Subgroup const& h) {
      std::string s;
      for (Elem m : h.members()) {
        s += (s.empty() ? "" : ",") + h.parent().name(m);
      }
      return "{" + s + "}";
    }

    // Bracoid whose target is G/H under `target_op`, acted on by `acting`
    // through g ⊙ xH = (g Γ x)H.
    Bracoid coset_bracoid(FiniteGroup const&  G,
                          Subgroup const&     h,
                          OpTable             acting,
                          OpTable const&      target_op,
                          SweepOptions const& sweep) {
      auto const cs     = coset_space(G, h);
      auto       target = detail::internal_guard("induced target operation", [&] {
        return induced_table(target_op, cs.coset_of, cs.representatives, sweep);
      });
      std::size_t const q = cs.size();
      Bracoid           b{std::move(acting), std::move(target), {}, {}, {}, {}, {}, {}};
      b.action.resize(G.order() * q);
      for (Elem g = 0; g < G.order(); ++g) {
        for (Elem i = 0; i < q; ++i) {
          b.action[g * q + i] = cs.coset_of[b.acting.op(g, cs.representatives[i])];
        }
      }
      for (Elem g = 0; g < G.order(); ++g) {
        for (Elem x = 0; x < G.order(); ++x) {
          if (cs.coset_of[b.acting.op(g, x)] != b.act(g, cs.coset_of[x])) {
            throw InternalError("coset action is not well defined at ("
                                + G.name(g) + ", " + G.name(x) + ")");
          }
        }
      }
      b.acting_names.assign(G.names().begin(), G.names().end());
      for (Elem r : cs.representatives) {
        b.target_names.push_back(coset_name(G, r, "H"));
      }
      b.target_embedding = cs.representatives;
      return b;
    }

    void check_constructed(Bracoid const& b, SweepOptions const& sweep) {
      auto r = verify_bracoid(b, sweep);
      if (!r.ok()) {
        throw InternalError(b.provenance.construction + " produced an invalid bracoid ("
                            + r.first_failure->kind + ")");
      }
    }
  }  // namespace

  BracoidReport verify_bracoid(Bracoid const& b, SweepOptions const& sweep) {
    BracoidReport     rep;
    std::size_t const G = b.acting_order();
    std::size_t const N = b.target_order();
    if (b.action.size() != G * N) {
      rep.first_failure = BracoidFailure{"identity", {}};
      return rep;
    }
    for (Elem x : b.action) {
      if (x >= N) {
        rep.first_failure = BracoidFailure{"identity", {}};
        return rep;
      }
    }
    rep.sampled = !sweep.exhaustive_for(G);

    // Runs bad(g, i, j) over g < G, i < I, j < J exhaustively or sampled.
    auto const sweep3 = [&](std::size_t I, std::size_t J, auto const& bad)
        -> std::optional<std::vector<Elem>> {
      if (!rep.sampled) {
        return detail::find_first<std::vector<Elem>>(
            G, sweep.threads, [&](std::size_t g) -> std::optional<std::vector<Elem>> {
              for (Elem i = 0; i < I; ++i) {
                for (Elem j = 0; j < J; ++j) {
                  if (bad(static_cast<Elem>(g), i, j)) {
                    return std::vector<Elem>{static_cast<Elem>(g), i, j};
                  }
                }
              }
              return std::nullopt;
            });
      }
      std::mt19937_64                     rng(sweep.seed);
      std::uniform_int_distribution<Elem> pg(0, static_cast<Elem>(G - 1));
      std::uniform_int_distribution<Elem> pi(0, static_cast<Elem>(I - 1));
      std::uniform_int_distribution<Elem> pj(0, static_cast<Elem>(J - 1));
      for (std::size_t s = 0; s < sweep.samples; ++s) {
        Elem g = pg(rng), i = pi(rng), j = pj(rng);
        if (bad(g, i, j)) {
          return std::vector<Elem>{g, i, j};
        }
      }
      return std::nullopt;
    };

    rep.action_valid = true;
    for (Elem eta = 0; eta < N; ++eta) {
      if (b.act(0, eta) != eta) {
        rep.action_valid  = false;
        rep.first_failure = BracoidFailure{"identity", {eta}};
        break;
      }
    }
    if (rep.action_valid) {
      auto bad = sweep3(G, N, [&](Elem g, Elem h, Elem eta) {
        return b.act(b.acting.op(g, h), eta) != b.act(g, b.act(h, eta));
      });
      if (bad) {
        rep.action_valid  = false;
        rep.first_failure = BracoidFailure{"compatibility", std::move(*bad)};
      }
    }

    std::vector<std::uint8_t> seen(N, 0);
    for (Elem g = 0; g < G; ++g) {
      seen[b.act(g, 0)] = 1;
    }
    rep.transitive = true;
    for (Elem eta = 0; eta < N; ++eta) {
      if (!seen[eta]) {
        rep.transitive = false;
        if (!rep.first_failure) {
          rep.first_failure = BracoidFailure{"transitivity", {eta}};
        }
        break;
      }
    }

    auto const& T   = b.target;
    auto        bad = sweep3(N, N, [&](Elem g, Elem eta, Elem mu) {
      return b.act(g, T.op(eta, mu))
             != T.op(T.op(b.act(g, eta), T.inverse(b.act(g, 0))), b.act(g, mu));
    });
    rep.relation_holds = !bad.has_value();
    if (bad && !rep.first_failure) {
      rep.first_failure = BracoidFailure{"relation", std::move(*bad)};
    }
    return rep;
  }

  Bracoid bracoid_from_brace(SkewBrace const& sb) {
    Bracoid b{sb.multiplicative(), sb.additive(), {}, Provenance{"brace", {}}, {}, {}, {}, true};
    b.action.assign(sb.multiplicative().table().begin(), sb.multiplicative().table().end());
    for (std::size_t i = 0; i < sb.order(); ++i) {
      b.acting_names.push_back(std::to_string(i));
      b.target_embedding.push_back(static_cast<Elem>(i));
    }
    b.target_names = b.acting_names;
    b.provenance.with("additive", sb.additive().label())
        .with("multiplicative", sb.multiplicative().label());
    return b;
  }

  Bracoid bracoid_from_c1(GroupMap const&     psi,
                          Subgroup const&     h,
                          bool                opposite,
                          SweepOptions const& sweep) {
    require_abelian_map(psi, "bracoid_from_c1");
    require_subgroup_of(psi, h, "bracoid_from_c1");
    IdealClassifier cls(psi);
    if (!cls.c1(h)) {
      throw PreconditionError("bracoid_from_c1: [G, phi(H)] <= H fails for H = "
                              + members_string(h));
    }
    auto const& G    = psi.domain();
    auto        circ = circle_table(G, psi, "∘", sweep);
    // y ∘ H = yH for every y.
    auto const cs = coset_space(G, h);
    for (Elem y = 0; y < G.order(); ++y) {
      for (Elem m : h.members()) {
        if (cs.coset_of[circ.op(y, m)] != cs.coset_of[y]) {
          throw InternalError("circle coset of " + G.name(y) + " differs from its coset");
        }
      }
    }
    auto const& op = opposite ? opposite_table(circ) : circ;
    Bracoid     b  = coset_bracoid(G, h, OpTable::of(G), op, sweep);
    b.provenance   = Provenance{"C1", {}};
    b.provenance.with("subgroup", members_string(h))
        .with("target_operation", op.label());
    check_constructed(b, sweep);
    return b;
  }

  Bracoid bracoid_from_c2(GroupMap const&     psi,
                          Subgroup const&     h,
                          bool                opposite,
                          SweepOptions const& sweep) {
    require_abelian_map(psi, "bracoid_from_c2");
    require_subgroup_of(psi, h, "bracoid_from_c2");
    IdealClassifier cls(psi);
    if (!cls.c2(h)) {
      throw PreconditionError("bracoid_from_c2: H = " + members_string(h)
                              + " is not normal in G");
    }
    auto const& G   = psi.domain();
    auto        dot = OpTable::of(G);
    auto const& op  = opposite ? opposite_table(dot) : dot;
    Bracoid     b   = coset_bracoid(G, h, circle_table(G, psi, "∘", sweep), op, sweep);
    b.brace_reducible = cls.c1(h);
    b.provenance      = Provenance{"C2", {}};
    b.provenance.with("subgroup", members_string(h))
        .with("target_operation", op.label());
    check_constructed(b, sweep);
    return b;
  }

  std::vector<Elem> action_kernel(Bracoid const& b) {
    std::vector<Elem> k;
    for (Elem g = 0; g < b.acting_order(); ++g) {
      bool trivial = true;
      for (Elem eta = 0; eta < b.target_order() && trivial; ++eta) {
        trivial = b.act(g, eta) == eta;
      }
      if (trivial) {
        k.push_back(g);
      }
    }
    return k;
  }

  FiniteGroup acting_group(Bracoid const& b) {
    return b.acting.as_group(b.acting_names);
  }

  Bracoid reduce_bracoid(Bracoid const& b, SweepOptions const& sweep) {
    auto kernel = action_kernel(b);
    if (kernel.size() == 1) {
      return b;
    }
    auto const G  = acting_group(b);
    auto const K  = detail::internal_guard("action kernel", [&] {
      return Subgroup::from_members(G, kernel);
    });
    if (!is_normal(G, K)) {
      throw InternalError("action kernel is not normal in the acting group");
    }
    auto const cs     = coset_space(G, K);
    auto       acting = detail::internal_guard("reduced acting group", [&] {
      return induced_table(b.acting, cs.coset_of, cs.representatives, sweep);
    });
    std::size_t const q = cs.size();
    std::size_t const N = b.target_order();
    Bracoid r{std::move(acting), b.target, {}, {}, {}, b.target_names,
              b.target_embedding, b.brace_reducible};
    r.action.resize(q * N);
    for (Elem i = 0; i < q; ++i) {
      for (Elem eta = 0; eta < N; ++eta) {
        r.action[i * N + eta] = b.act(cs.representatives[i], eta);
      }
    }
    for (Elem rep : cs.representatives) {
      r.acting_names.push_back(coset_name(G, rep, "K"));
    }
    r.provenance = Provenance{"reduced", {}};
    r.provenance.with("from", b.provenance.construction)
        .with("kernel_order", std::to_string(K.order()));
    for (auto const& kv : b.provenance.inputs) {
      r.provenance.with(kv.first, kv.second);
    }
    check_constructed(r, sweep);
    return r;
  }

  bool acts_regularly(Bracoid const& b, std::span<Elem const> k) {
    if (k.size() != b.target_order()) {
      return false;
    }
    std::vector<std::uint8_t> hit(b.target_order(), 0);
    for (Elem g : k) {
      if (g >= b.acting_order() || hit[b.act(g, 0)]++) {
        return false;
      }
    }
    return true;
  }

  std::optional<Subgroup> find_contained_brace(Bracoid const&           b,
                                               EnumerationLimits const& lim) {
    auto const        G = acting_group(b);
    EnumerationLimits l = lim;
    l.order_divides     = b.target_order();
    for (auto const& k : enumerate_subgroups(G, l)) {
      if (k.order() == b.target_order() && acts_regularly(b, k.members())) {
        return k;
      }
    }
    return std::nullopt;
  }

  Bracoid phi_tower_bracoid(GroupMap const&     psi,
                            std::size_t         n,
                            SweepOptions const& sweep) {
    require_abelian_map(psi, "phi_tower_bracoid");
    auto const&       G  = psi.domain();
    auto const        pn = phi_power(psi, n);
    std::vector<Elem> members(pn);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto const image = detail::internal_guard("phi^n(G)", [&] {
      return Subgroup::from_members(G, members);
    });
    std::size_t const N     = image.order();
    std::vector<Elem> rep(N, kNone);
    for (Elem x = 0; x < G.order(); ++x) {
      auto& r = rep[image.local_index(pn[x])];
      if (r == kNone) {
        r = x;
      }
    }
    auto const target_group = image.as_group();
    Bracoid    b{OpTable::of(G),
              detail::internal_guard("phi^n(G) table",
                                     [&] {
                                       return OpTable::group(
                                           N,
                                           std::vector<Elem>(target_group.table().begin(),
                                                             target_group.table().end()),
                                           "·", sweep);
                                     }),
              {}, Provenance{"phi_tower", {}},
              std::vector<std::string>(G.names().begin(), G.names().end()),
              std::vector<std::string>(target_group.names().begin(), target_group.names().end()),
              std::vector<Elem>(image.members().begin(), image.members().end()),
              std::nullopt};
    b.action.resize(G.order() * N);
    for (Elem g = 0; g < G.order(); ++g) {
      for (Elem i = 0; i < N; ++i) {
        b.action[g * N + i] = image.local_index(pn[G.mul(g, rep[i])]);
      }
      for (Elem x = 0; x < G.order(); ++x) {
        if (image.local_index(pn[G.mul(g, x)]) != b.act(g, image.local_index(pn[x]))) {
          throw InternalError("tower action depends on the representative at ("
                              + G.name(g) + ", " + G.name(x) + ")");
        }
      }
    }
    b.provenance.with("n", std::to_string(n));
    check_constructed(b, sweep);
    return b;
  }

}  // namespace skb
