#ifndef SKBRACE_BRACOID_HPP_
#define SKBRACE_BRACOID_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "skbrace/brace.hpp"
#include "skbrace/group.hpp"
#include "skbrace/hom_maps.hpp"
#include "skbrace/provenance.hpp"
#include "skbrace/sweep.hpp"

namespace skb {

  //! A group (G, Γ) acting on a group (N, ⋆) by g ⊙ η.  The action table is
  //! stored row-major: action[g * |N| + η].  Target index 0 is e_N.
  struct Bracoid {
    OpTable           acting;
    OpTable           target;
    std::vector<Elem> action;
    Provenance        provenance;
    std::vector<std::string> acting_names;
    std::vector<std::string> target_names;
    //! For each target index, an element of the parent group representing
    //! it (coset representative or subgroup member); empty when the target
    //! is not derived from the acting carrier.
    std::vector<Elem> target_embedding;
    //! Set by constructions that know whether a brace quotient exists.
    std::optional<bool> brace_reducible;

    std::size_t acting_order() const noexcept {
      return acting.order();
    }

    std::size_t target_order() const noexcept {
      return target.order();
    }

    Elem act(Elem g, Elem eta) const noexcept {
      return action[static_cast<std::size_t>(g) * target.order() + eta];
    }
  };

  struct BracoidFailure {
    //! "identity", "compatibility", "transitivity" or "relation".
    std::string       kind;
    std::vector<Elem> witness;
  };

  struct BracoidReport {
    bool action_valid   = false;
    bool transitive     = false;
    bool relation_holds = false;
    bool sampled        = false;
    std::optional<BracoidFailure> first_failure;

    bool ok() const noexcept {
      return action_valid && transitive && relation_holds;
    }
  };

  //! Checks the action axioms, transitivity and
  //! g ⊙ (η ⋆ μ) = (g ⊙ η) ⋆ (g ⊙ e_N)^-1 ⋆ (g ⊙ μ).
  BracoidReport verify_bracoid(Bracoid const&      b,
                               SweepOptions const& sweep = default_sweep());

  //! The brace (A, M) as a bracoid: M acts on A by g ⊙ η = g M η.
  Bracoid bracoid_from_brace(SkewBrace const& b);

  //! (G, ·) acting on G/H by g ⊙ xH = (gx)H, where G/H carries the operation
  //! induced by ∘ (∘′ when `opposite`).  Requires C1.
  Bracoid bracoid_from_c1(GroupMap const&     psi,
                          Subgroup const&     h,
                          bool                opposite = false,
                          SweepOptions const& sweep    = default_sweep());

  //! (G, ∘) acting on G/H by g ⊙ xH = (g ∘ x)H, where G/H carries the
  //! operation induced by · (·′ when `opposite`).  Requires C2;
  //! brace_reducible records C1.
  Bracoid bracoid_from_c2(GroupMap const&     psi,
                          Subgroup const&     h,
                          bool                opposite = false,
                          SweepOptions const& sweep    = default_sweep());

  //! Members of the acting group that fix every target element.
  std::vector<Elem> action_kernel(Bracoid const& b);

  //! Quotient of the acting group by the action kernel; returns `b` itself
  //! when the action is already faithful.
  Bracoid reduce_bracoid(Bracoid const& b, SweepOptions const& sweep = default_sweep());

  //! The acting group as a FiniteGroup (names from acting_names).
  FiniteGroup acting_group(Bracoid const& b);

  //! Whether the acting elements `k` (a subgroup) act regularly on the target.
  bool acts_regularly(Bracoid const& b, std::span<Elem const> k);

  //! The first subgroup of order |N|, in canonical order, acting regularly.
  std::optional<Subgroup> find_contained_brace(Bracoid const&           b,
                                               EnumerationLimits const& lim = {});

  //! (G, ·) acting on φ^n(G) <= (G, ·) by g ⊙ φ^n(x) = φ^n(gx).
  Bracoid phi_tower_bracoid(GroupMap const&     psi,
                            std::size_t         n,
                            SweepOptions const& sweep = default_sweep());

}  // namespace skb

#endif  // SKBRACE_BRACOID_HPP_
