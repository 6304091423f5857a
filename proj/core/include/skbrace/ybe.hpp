#ifndef SKBRACE_YBE_HPP_
#define SKBRACE_YBE_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "skbrace/bracoid.hpp"
#include "skbrace/group.hpp"
#include "skbrace/hom_maps.hpp"
#include "skbrace/provenance.hpp"
#include "skbrace/sweep.hpp"

namespace skb {

  //! A set-theoretic map R(x, y) = (λ_x(y), ρ_y(x)) on {0, .., order-1}.
  //! Storage: lambda[x * order + y] = λ_x(y), rho[y * order + x] = ρ_y(x).
  struct YbeSolution {
    std::size_t       order = 0;
    std::vector<Elem> lambda;
    std::vector<Elem> rho;
    Provenance        provenance;

    Elem lambda_of(Elem x, Elem y) const noexcept {
      return lambda[static_cast<std::size_t>(x) * order + y];
    }

    Elem rho_of(Elem y, Elem x) const noexcept {
      return rho[static_cast<std::size_t>(y) * order + x];
    }

    std::pair<Elem, Elem> operator()(Elem x, Elem y) const noexcept {
      return {lambda_of(x, y), rho_of(y, x)};
    }

    //! Same tables (provenance ignored).
    bool same_map(YbeSolution const& other) const noexcept {
      return order == other.order && lambda == other.lambda && rho == other.rho;
    }
  };

  struct NondegeneracyReport {
    bool left  = false;
    bool right = false;
    //! First x with λ_x not injective and a colliding pair (y1, y2).
    std::optional<std::array<Elem, 3>> left_witness;
    //! First y with ρ_y not injective and a colliding pair (x1, x2).
    std::optional<std::array<Elem, 3>> right_witness;
  };

  NondegeneracyReport nondegeneracy(YbeSolution const& s);

  struct YbeReport {
    bool                holds   = false;
    bool                sampled = false;
    NondegeneracyReport nondegeneracy;
    //! First (x, y, z) where the two sides of the braid relation differ.
    std::optional<std::array<Elem, 3>> witness;
  };

  //! Checks (R×id)(id×R)(R×id) = (id×R)(R×id)(id×R) on all triples (sampled
  //! above the sweep cap) and the non-degeneracy of λ and ρ.
  YbeReport verify_ybe(YbeSolution const& s, SweepOptions const& sweep = default_sweep());

  //! For idempotent psi in Ab(G):
  //! λ_x(y) = ψ(x)φ(y)ψ(x^-1), ρ_y(x) = ψ(x)φ(y)^-1 φ(x^-1)^-1 y.
  //! The equivalent form ψ(x)φ(y)^-1 ψ(x^-1)xy is evaluated too and must agree.
  YbeSolution build_ybe_idempotent(GroupMap const& psi);

  //! On G1 × G2, for alpha in Ab(G1, G2) and beta in Ab(G2, G1):
  //! λ_x(y) = (e, α(x1^-1) y2 α(x1)),
  //! ρ_y(x) = (β(y2) x1 β(x2^-1) y1 β(x2 y2^-1),
  //!           α(x1)^-1 y2^-1 α(x1) x2 α(x1)^-1 y2 α(x1)).
  //! Cross-checked against the contained-brace construction.
  YbeSolution build_ybe_product(GroupMap const& alpha, GroupMap const& beta);

  //! For abelian G and idempotent psi: R(x, y) = (φ(y), ψ(y)x) and
  //! R'(x, y) = (ψ(y), φ(y)x).
  std::pair<YbeSolution, YbeSolution> build_ybe_abelian_pair(GroupMap const& psi);

  //! From a bracoid and a subgroup K of the acting group acting regularly on
  //! the target.  With ι the inverse of k -> k ⊙ e_N on K:
  //! λ_x(y) = ι((x ⊙ e)^-1 ⋆ (x ⊙ (y ⊙ e))), ρ_y(x) = λ_x(y)^-1 Γ x Γ y.
  YbeSolution build_ybe_from_contained_brace(Bracoid const& b, Subgroup const& k);

}  // namespace skb

#endif  // SKBRACE_YBE_HPP_
