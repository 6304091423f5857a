#include "skbrace/ybe.hpp"

#include <algorithm>  // for fill
#include <random>     // for mt19937_64
#include <string>     // for string, to_string

#include "skbrace/error.hpp"

namespace skb {

  namespace {
    constexpr Elem kNone = static_cast<Elem>(-1);

    YbeSolution blank(std::size_t n, std::string construction) {
      return YbeSolution{n, std::vector<Elem>(n * n), std::vector<Elem>(n * n),
                         Provenance{std::move(construction), {}}};
    }

    void require_idempotent_abelian(GroupMap const& psi, char const* who) {
      if (!psi.is_endomorphism() || !psi.is_abelian_map()) {
        throw PreconditionError(std::string(who) + ": psi is not in Ab(G)");
      }
      if (!psi.flags().idempotent.value_or(false)) {
        throw PreconditionError(std::string(who) + ": psi is not idempotent");
      }
    }

    std::string map_string(GroupMap const& f) {
      std::string s;
      for (Elem g = 0; g < f.domain().order(); ++g) {
        s += (s.empty() ? "" : ",") + f.codomain().name(f(g));
      }
      return "[" + s + "]";
    }
  }  // namespace

  NondegeneracyReport nondegeneracy(YbeSolution const& s) {
    NondegeneracyReport r;
    std::size_t const   n = s.order;
    auto const first_collision = [&](auto const& value) -> std::optional<std::array<Elem, 3>> {
      std::vector<Elem> first(n, kNone);
      for (Elem a = 0; a < n; ++a) {
        std::fill(first.begin(), first.end(), kNone);
        for (Elem b = 0; b < n; ++b) {
          Elem& slot = first[value(a, b)];
          if (slot != kNone) {
            return std::array<Elem, 3>{a, slot, b};
          }
          slot = b;
        }
      }
      return std::nullopt;
    };
    r.left_witness  = first_collision([&](Elem x, Elem y) { return s.lambda_of(x, y); });
    r.right_witness = first_collision([&](Elem y, Elem x) { return s.rho_of(y, x); });
    r.left          = !r.left_witness;
    r.right         = !r.right_witness;
    return r;
  }

  YbeReport verify_ybe(YbeSolution const& s, SweepOptions const& sweep) {
    YbeReport         rep;
    std::size_t const n = s.order;
    auto const        bad = [&](Elem x, Elem y, Elem z) {
      auto [a, b]   = s(x, y);
      auto [c, d]   = s(b, z);
      auto [f, g]   = s(a, c);
      auto [b1, c1] = s(y, z);
      auto [a2, b2] = s(x, b1);
      auto [b3, c3] = s(b2, c1);
      return f != a2 || g != b3 || d != c3;
    };
    rep.sampled = !sweep.exhaustive_for(n);
    if (!rep.sampled) {
      rep.witness = detail::find_first<std::array<Elem, 3>>(
          n, sweep.threads, [&](std::size_t x) -> std::optional<std::array<Elem, 3>> {
            for (Elem y = 0; y < n; ++y) {
              for (Elem z = 0; z < n; ++z) {
                if (bad(static_cast<Elem>(x), y, z)) {
                  return std::array<Elem, 3>{static_cast<Elem>(x), y, z};
                }
              }
            }
            return std::nullopt;
          });
    } else if (n > 0) {
      std::mt19937_64                     rng(sweep.seed);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      for (std::size_t i = 0; i < sweep.samples && !rep.witness; ++i) {
        Elem x = pick(rng), y = pick(rng), z = pick(rng);
        if (bad(x, y, z)) {
          rep.witness = std::array<Elem, 3>{x, y, z};
        }
      }
    }
    rep.holds         = !rep.witness;
    rep.nondegeneracy = nondegeneracy(s);
    return rep;
  }

  YbeSolution build_ybe_idempotent(GroupMap const& psi) {
    require_idempotent_abelian(psi, "build_ybe_idempotent");
    auto const& G   = psi.domain();
    auto const  phi = phi_values(psi);
    std::size_t n   = G.order();
    auto        s   = blank(n, "idempotent");
    for (Elem x = 0; x < n; ++x) {
      Elem const px    = psi(x);
      Elem const pxinv = psi(G.inv(x));
      Elem const phix  = G.inv(phi[G.inv(x)]);  // φ(x^-1)^-1
      for (Elem y = 0; y < n; ++y) {
        Elem const lam      = G.mul(px, phi[y], pxinv);
        Elem const rho      = G.mul(G.mul(px, G.inv(phi[y])), G.mul(phix, y));
        Elem const rho_alt  = G.mul(G.mul(px, G.inv(phi[y])), G.mul(pxinv, x), y);
        if (rho != rho_alt) {
          throw InternalError("the two closed forms of rho differ at (" + G.name(x)
                              + ", " + G.name(y) + ")");
        }
        s.lambda[x * n + y] = lam;
        s.rho[y * n + x]    = rho;
      }
    }
    s.provenance.with("group", std::to_string(n)).with("psi", map_string(psi));
    return s;
  }

  YbeSolution build_ybe_from_contained_brace(Bracoid const& b, Subgroup const& k) {
    if (!(k.parent() == acting_group(b))) {
      throw PreconditionError("K is not a subgroup of the acting group");
    }
    if (!acts_regularly(b, k.members())) {
      throw PreconditionError("K does not act regularly on the target");
    }
    std::size_t const n = b.acting_order();
    std::vector<Elem> iota(b.target_order());
    for (Elem m : k.members()) {
      iota[b.act(m, 0)] = m;
    }
    auto const& T = b.target;
    auto const& A = b.acting;
    auto        s = blank(n, "contained_brace");
    for (Elem x = 0; x < n; ++x) {
      Elem const xe_inv = T.inverse(b.act(x, 0));
      for (Elem y = 0; y < n; ++y) {
        Elem const lam      = iota[T.op(xe_inv, b.act(x, b.act(y, 0)))];
        s.lambda[x * n + y] = lam;
        s.rho[y * n + x]    = A.op(A.op(A.inverse(lam), x), y);
      }
    }
    s.provenance = b.provenance;
    s.provenance.construction = "contained_brace(" + b.provenance.construction + ")";
    s.provenance.with("K_order", std::to_string(k.order()));
    return s;
  }

  YbeSolution build_ybe_product(GroupMap const& alpha, GroupMap const& beta) {
    if (!alpha.is_abelian_map() || !beta.is_abelian_map()) {
      throw PreconditionError("build_ybe_product: alpha and beta must be abelian maps");
    }
    auto const  psi = product_swap_map(alpha, beta);
    auto const& G   = psi.domain();
    auto const& G1  = alpha.domain();
    auto const& G2  = alpha.codomain();
    std::size_t n   = G.order();
    auto        s   = blank(n, "product");
    for (Elem x = 0; x < n; ++x) {
      auto const xc = G.coordinates(x);
      Elem const x1 = xc[0], x2 = xc[1];
      Elem const a  = alpha(x1), ainv = G2.inv(a);
      for (Elem y = 0; y < n; ++y) {
        auto const yc = G.coordinates(y);
        Elem const y1 = yc[0], y2 = yc[1];
        Elem const l2 = G2.mul(ainv, y2, a);  // α(x1^-1) = α(x1)^-1
        Elem const r1 = G1.mul(G1.mul(beta(y2), x1, beta(G2.inv(x2))),
                               G1.mul(y1, beta(G2.mul(x2, G2.inv(y2)))));
        Elem const r2 = G2.mul(G2.mul(ainv, G2.inv(y2), a),
                               G2.mul(x2, G2.mul(ainv, y2, a)));
        std::array<Elem, 2> lam{0, l2}, rho{r1, r2};
        s.lambda[x * n + y] = G.from_coordinates(lam);
        s.rho[y * n + x]    = G.from_coordinates(rho);
      }
    }
    s.provenance.with("alpha", map_string(alpha)).with("beta", map_string(beta));

    // The same solution from the bracoid of G1 x {e} with K = {e} x G2.
    std::vector<Elem> h, k;
    for (Elem g1 = 0; g1 < G1.order(); ++g1) {
      std::array<Elem, 2> c{g1, 0};
      h.push_back(G.from_coordinates(c));
    }
    for (Elem g2 = 0; g2 < G2.order(); ++g2) {
      std::array<Elem, 2> c{0, g2};
      k.push_back(G.from_coordinates(c));
    }
    auto const check = detail::internal_guard("product bracoid", [&] {
      auto const b = bracoid_from_c2(psi, Subgroup::from_members(G, h));
      return build_ybe_from_contained_brace(
          b, Subgroup::from_members(acting_group(b), k));
    });
    if (!check.same_map(s)) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (check(x, y) != s(x, y)) {
            throw InternalError("product solution differs from the bracoid construction at ("
                                + G.name(x) + ", " + G.name(y) + ")");
          }
        }
      }
    }
    return s;
  }

  std::pair<YbeSolution, YbeSolution> build_ybe_abelian_pair(GroupMap const& psi) {
    require_idempotent_abelian(psi, "build_ybe_abelian_pair");
    auto const& G = psi.domain();
    if (!G.is_abelian()) {
      throw PreconditionError("build_ybe_abelian_pair: G is not abelian");
    }
    std::size_t const n   = G.order();
    auto const        phi = phi_values(psi);
    auto              r   = blank(n, "abelian_pair_R");
    auto              rp  = blank(n, "abelian_pair_R'");
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        r.lambda[x * n + y]  = phi[y];
        r.rho[y * n + x]     = G.mul(psi(y), x);
        rp.lambda[x * n + y] = psi(y);
        rp.rho[y * n + x]    = G.mul(phi[y], x);
      }
    }
    if (!r.same_map(build_ybe_idempotent(psi))) {
      throw InternalError("R differs from the idempotent solution of psi");
    }
    auto const phi_map = detail::internal_guard(
        "phi as an endomorphism", [&] { return make_map(G, G, phi, "phi"); });
    if (!rp.same_map(build_ybe_idempotent(phi_map))) {
      throw InternalError("R' differs from the idempotent solution of phi");
    }
    r.provenance.with("psi", map_string(psi));
    rp.provenance.with("psi", map_string(psi));
    return {std::move(r), std::move(rp)};
  }

}  // namespace skb
