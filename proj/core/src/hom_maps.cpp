#include "skbrace/hom_maps.hpp"

#include <algorithm>  // for sort, unique, all_of
#include <array>      // for array
#include <cmath>      // for pow
#include <string>     // for to_string

#include "skbrace/brace.hpp"
#include "skbrace/error.hpp"

namespace skb {

  namespace {
    constexpr Elem kUnset = static_cast<Elem>(-1);

    // Extends the images of `gens` along right multiplication by generators
    // over the subgroup they generate.  Returns false on an inconsistent
    // assignment.  Unreached entries of `img` are left as kUnset.
    bool extend_images(FiniteGroup const&    dom,
                       FiniteGroup const&    cod,
                       std::span<Elem const> gens,
                       std::span<Elem const> gen_images,
                       std::vector<Elem>&    img,
                       std::size_t&          reached) {
      img.assign(dom.order(), kUnset);
      img[0]             = 0;
      std::vector<Elem> q{0};
      for (std::size_t i = 0; i < q.size(); ++i) {
        Elem x = q[i];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Elem y  = dom.mul(x, gens[j]);
          Elem fy = cod.mul(img[x], gen_images[j]);
          if (img[y] == kUnset) {
            img[y] = fy;
            q.push_back(y);
          } else if (img[y] != fy) {
            return false;
          }
        }
      }
      reached = q.size();
      return true;
    }

    bool commute_pairwise(FiniteGroup const& g, std::span<Elem const> xs) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (g.mul(xs[i], xs[j]) != g.mul(xs[j], xs[i])) {
            return false;
          }
        }
      }
      return true;
    }

    void require_abelian_map(GroupMap const& f, char const* what) {
      if (!f.is_abelian_map()) {
        throw PreconditionError(std::string(what)
                                + " must be a homomorphism with abelian image");
      }
    }

    void require_ab_endo(GroupMap const& psi, char const* what) {
      require_abelian_map(psi, what);
      if (!psi.is_endomorphism()) {
        throw PreconditionError(std::string(what) + " must be an endomorphism");
      }
    }
  }  // namespace

  GroupMap GroupMap::tabulate(FiniteGroup       domain,
                              FiniteGroup       codomain,
                              std::vector<Elem> image,
                              std::string       builder) {
    if (image.size() != domain.order()) {
      throw PreconditionError("image array has length "
                              + std::to_string(image.size()) + ", expected "
                              + std::to_string(domain.order()));
    }
    for (Elem x : image) {
      if (x >= codomain.order()) {
        throw PreconditionError("image index out of range");
      }
    }
    GroupMap f(std::move(domain), std::move(codomain), std::move(image),
               std::move(builder));
    auto const& D = f.domain_;
    auto const& C = f.codomain_;
    bool        hom = true;
    for (Elem a = 0; a < D.order() && hom; ++a) {
      for (Elem b = 0; b < D.order(); ++b) {
        if (f.image_[D.mul(a, b)] != C.mul(f.image_[a], f.image_[b])) {
          hom = false;
          break;
        }
      }
    }
    f.flags_.is_hom = hom;
    std::vector<Elem> im(f.image_);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    f.flags_.abelian_image = commute_pairwise(C, im);
    if (f.is_endomorphism()) {
      bool idem = true, fpf = true;
      for (Elem g = 0; g < D.order(); ++g) {
        idem = idem && f.image_[f.image_[g]] == f.image_[g];
        fpf  = fpf && (g == 0 || f.image_[g] != g);
      }
      f.flags_.idempotent       = idem;
      f.flags_.fixed_point_free = fpf;
    }
    return f;
  }

  GroupMap make_map(FiniteGroup const& domain,
                    FiniteGroup const& codomain,
                    std::vector<Elem>  image,
                    std::string        builder) {
    auto f = GroupMap::tabulate(domain, codomain, std::move(image), std::move(builder));
    if (!f.flags().is_hom) {
      throw PreconditionError("map is not a homomorphism");
    }
    return f;
  }

  GroupMap make_map(FiniteGroup const&                     domain,
                    FiniteGroup const&                     codomain,
                    std::span<std::pair<Elem, Elem> const> assignment,
                    std::string                            builder) {
    std::vector<Elem> gens, ims;
    for (auto [x, y] : assignment) {
      if (x >= domain.order() || y >= codomain.order()) {
        throw PreconditionError("generator image index out of range");
      }
      gens.push_back(x);
      ims.push_back(y);
    }
    std::vector<Elem> img;
    std::size_t       reached = 0;
    if (!extend_images(domain, codomain, gens, ims, img, reached)) {
      throw PreconditionError(
          "generator images do not extend to a homomorphism");
    }
    if (reached != domain.order()) {
      throw PreconditionError("the given elements do not generate the domain");
    }
    return make_map(domain, codomain, std::move(img), std::move(builder));
  }

  GroupMap identity_map(FiniteGroup const& g) {
    return make_map(g, g, g.all_elements(), "identity");
  }

  GroupMap trivial_map(FiniteGroup const& domain, FiniteGroup const& codomain) {
    return make_map(domain, codomain, std::vector<Elem>(domain.order(), 0), "trivial");
  }

  GroupMap compose(GroupMap const& f, GroupMap const& g) {
    if (!(g.codomain() == f.domain())) {
      throw PreconditionError("maps are not composable");
    }
    std::vector<Elem> im(g.domain().order());
    for (Elem x = 0; x < im.size(); ++x) {
      im[x] = f(g(x));
    }
    return GroupMap::tabulate(g.domain(), f.codomain(), std::move(im), "compose");
  }

  std::vector<GroupMap> enumerate_abelian_maps(FiniteGroup const&       domain,
                                               FiniteGroup const&       codomain,
                                               AbelianMapOptions const& opts) {
    auto const gens = domain.generators();
    if (gens.empty() && domain.order() > 1) {
      throw PreconditionError("domain has no generating set");
    }
    double const space = std::pow(static_cast<double>(codomain.order()),
                                  static_cast<double>(gens.size()));
    if (space > opts.max_candidates) {
      throw PreconditionError("abelian map search space "
                              + std::to_string(space) + " exceeds the cap");
    }
    std::vector<std::size_t> cod_order(codomain.order());
    for (Elem c = 0; c < codomain.order(); ++c) {
      cod_order[c] = codomain.element_order(c);
    }
    std::vector<std::size_t> gen_order;
    for (Elem g : gens) {
      gen_order.push_back(domain.element_order(g));
    }

    std::vector<GroupMap> out;
    std::vector<Elem>     chosen(gens.size());
    std::vector<Elem>     img;
    std::size_t           reached = 0;

    auto dfs = [&](auto&& self, std::size_t d) -> void {
      if (d == gens.size()) {
        extend_images(domain, codomain, gens, chosen, img, reached);
        auto f = GroupMap::tabulate(domain, codomain, img, "enumerate_abelian_maps");
        if (!f.is_abelian_map()) {
          throw InternalError("enumerated map failed verification");
        }
        out.push_back(std::move(f));
        return;
      }
      for (Elem c = 0; c < codomain.order(); ++c) {
        if (gen_order[d] % cod_order[c] != 0) {
          continue;
        }
        bool commutes = true;
        for (std::size_t j = 0; j < d && commutes; ++j) {
          commutes = codomain.mul(c, chosen[j]) == codomain.mul(chosen[j], c);
        }
        if (!commutes) {
          continue;
        }
        chosen[d] = c;
        if (extend_images(domain,
                          codomain,
                          gens.subspan(0, d + 1),
                          std::span<Elem const>(chosen).subspan(0, d + 1),
                          img,
                          reached)) {
          self(self, d + 1);
        }
      }
    };
    dfs(dfs, 0);
    return out;
  }

  Subgroup fixed_subgroup(GroupMap const& psi) {
    if (!psi.is_endomorphism()) {
      throw PreconditionError("fix is only defined for endomorphisms");
    }
    std::vector<Elem> fix;
    for (Elem g = 0; g < psi.domain().order(); ++g) {
      if (psi(g) == g) {
        fix.push_back(g);
      }
    }
    return detail::internal_guard("fix(psi) is not a subgroup", [&] {
      return Subgroup::from_members(psi.domain(), std::move(fix));
    });
  }

  MapAnalysis map_analysis(GroupMap const& f) {
    if (!f.flags().is_hom) {
      throw PreconditionError("map_analysis needs a homomorphism");
    }
    std::vector<Elem> ker, im;
    for (Elem g = 0; g < f.domain().order(); ++g) {
      if (f(g) == 0) {
        ker.push_back(g);
      }
      im.push_back(f(g));
    }
    MapAnalysis a{
        detail::internal_guard("kernel",
                               [&] {
                                 return Subgroup::from_members(f.domain(), ker);
                               }),
        detail::internal_guard("image",
                               [&] {
                                 return Subgroup::from_members(f.codomain(), im);
                               }),
        std::nullopt,
        std::nullopt,
        std::nullopt};
    if (f.is_endomorphism()) {
      a.fix              = fixed_subgroup(f);
      a.idempotent       = f.flags().idempotent;
      a.fixed_point_free = a.fix->order() == 1;
    }
    return a;
  }

  std::vector<Elem> phi_values(GroupMap const& psi) {
    auto const&       G = psi.domain();
    std::vector<Elem> v(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      v[g] = G.mul(g, psi(G.inv(g)));
    }
    return v;
  }

  std::vector<Elem> phi_power(GroupMap const& psi, std::size_t n) {
    auto const        phi = phi_values(psi);
    std::vector<Elem> v   = psi.domain().all_elements();
    for (std::size_t k = 0; k < n; ++k) {
      for (auto& x : v) {
        x = phi[x];
      }
    }
    return v;
  }

  Subgroup PhiMap::image_subgroup() const {
    auto const& G = psi_.domain();
    return detail::internal_guard("phi(G) is not a subgroup", [&] {
      return Subgroup::from_members(G, image_);
    });
  }

  std::vector<Elem> PhiMap::image_of(std::span<Elem const> subset) const {
    std::vector<Elem> out;
    for (Elem x : subset) {
      out.push_back(image_[x]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  PhiMap phi_of(GroupMap const& psi) {
    require_ab_endo(psi, "psi");
    auto const& G    = psi.domain();
    auto        v    = phi_values(psi);
    auto const  circ = circle_table(G, psi);
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = 0; b < G.order(); ++b) {
        if (v[circ.op(a, b)] != G.mul(v[a], v[b])) {
          throw InternalError("phi is not a homomorphism (G, o) -> (G, .)");
        }
      }
    }
    for (Elem g = 0; g < G.order(); ++g) {
      if ((v[g] == 0) != (psi(g) == g)) {
        throw InternalError("ker phi differs from fix psi");
      }
    }
    return PhiMap(psi, std::move(v));
  }

  GroupMap psi_iterate(GroupMap const& psi, std::size_t n, std::size_t bound) {
    require_ab_endo(psi, "psi");
    if (n > bound) {
      throw PreconditionError("psi_iterate: n = " + std::to_string(n)
                              + " exceeds the bound " + std::to_string(bound));
    }
    auto const&       G   = psi.domain();
    auto const        phi = phi_values(psi);
    std::vector<Elem> prev(G.order(), 0), cur(G.order());
    for (std::size_t k = 1; k <= n; ++k) {
      for (Elem g = 0; g < G.order(); ++g) {
        cur[g] = G.mul(psi(g), prev[phi[g]]);
      }
      std::swap(prev, cur);
    }
    auto f = GroupMap::tabulate(G, G, std::move(prev), "psi_iterate");
    if (!f.is_abelian_map()) {
      throw InternalError("psi_" + std::to_string(n) + " is not an abelian map");
    }
    return f;
  }

  GroupMap product_swap_map(GroupMap const& alpha, GroupMap const& beta) {
    require_abelian_map(alpha, "alpha");
    require_abelian_map(beta, "beta");
    if (!(alpha.codomain() == beta.domain())
        || !(beta.codomain() == alpha.domain())) {
      throw PreconditionError("need alpha: G1 -> G2 and beta: G2 -> G1");
    }
    auto const& G1 = alpha.domain();
    auto const& G2 = alpha.codomain();
    auto const  P  = groups::direct_product(G1, G2);
    std::vector<Elem> im(P.order());
    for (Elem x = 0; x < P.order(); ++x) {
      auto c = P.coordinates(x);
      std::array<Elem, 2> out{beta(c[1]), alpha(c[0])};
      im[x] = P.from_coordinates(out);
    }
    auto f = GroupMap::tabulate(P, P, std::move(im), "product_swap_map");
    if (!f.is_abelian_map()) {
      throw InternalError("product_swap_map produced a map outside Ab(G)");
    }
    return f;
  }

  GroupMap cyclic_chain_map(std::span<GroupMap const> maps) {
    std::size_t const n = maps.size();
    if (n == 0) {
      throw PreconditionError("cyclic_chain_map needs at least one map");
    }
    std::vector<FiniteGroup> factors;
    for (std::size_t i = 0; i < n; ++i) {
      require_abelian_map(maps[i], "alpha_i");
      if (!(maps[i].codomain() == maps[(i + 1) % n].domain())) {
        throw PreconditionError("chain mismatch: codomain of alpha_"
                                + std::to_string(i) + " is not the domain of alpha_"
                                + std::to_string((i + 1) % n));
      }
      factors.push_back(maps[i].domain());
    }
    auto const        P = groups::direct_product(factors);
    std::vector<Elem> im(P.order()), out(n);
    for (Elem x = 0; x < P.order(); ++x) {
      auto c = P.coordinates(x);
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const i = (j + n - 1) % n;
        out[j]              = maps[i](c[i]);
      }
      im[x] = P.from_coordinates(out);
    }
    auto f = GroupMap::tabulate(P, P, std::move(im), "cyclic_chain_map");
    if (!f.is_abelian_map()) {
      throw InternalError("cyclic_chain_map produced a map outside Ab(G)");
    }
    return f;
  }

  GroupMap left_regular_map(FiniteGroup const& a) {
    if (!a.is_abelian()) {
      throw PreconditionError("left_regular_map needs an abelian group");
    }
    auto const        S = groups::symmetric(a.order());
    std::vector<Elem> im(a.order()), perm(a.order());
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem i = 0; i < a.order(); ++i) {
        perm[i] = a.mul(x, i);
      }
      im[x] = groups::permutation_rank(perm);
    }
    auto f = make_map(a, S, std::move(im), "left_regular_map");
    if (!f.is_abelian_map()) {
      throw InternalError("left regular image is not abelian");
    }
    return f;
  }

}  // namespace skb
