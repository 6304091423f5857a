#ifndef SKBRACE_IDEALS_HPP_
#define SKBRACE_IDEALS_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "skbrace/brace.hpp"
#include "skbrace/group.hpp"
#include "skbrace/hom_maps.hpp"

namespace skb {

  //! The five orientations of the braces attached to psi, written
  //! (additive, multiplicative).  A prime denotes the opposite operation.
  enum class BraceKind { circ_dot, circop_dot, dot_circ, dotop_circ, dot_circop };

  inline constexpr std::array<BraceKind, 5> all_brace_kinds = {BraceKind::circ_dot,
                                                               BraceKind::circop_dot,
                                                               BraceKind::dot_circ,
                                                               BraceKind::dotop_circ,
                                                               BraceKind::dot_circop};

  //! "(∘,·)", "(∘′,·)", "(·,∘)", "(·′,∘)" or "(·,∘′)".
  std::string_view label(BraceKind k) noexcept;

  //! Inverse of label(); accepts ' in place of ′.
  std::optional<BraceKind> parse_brace_kind(std::string_view s);

  struct IdealVerdict {
    Subgroup subgroup;
    //! [G, phi(H)] <= H.
    bool c1 = false;
    //! H normal in (G, .).
    bool c2 = false;
    //! Subset of circ_dot, circop_dot, dot_circ, dotop_circ.
    std::vector<BraceKind> strong_left_ideal_of;
    //! Subset of dot_circ, dot_circop, circop_dot.
    std::vector<BraceKind> ideal_of;

    bool is_strong_left_ideal_of(BraceKind k) const noexcept;
    bool is_ideal_of(BraceKind k) const noexcept;
  };

  //! Classifies subgroups of (G, .) for a fixed psi in Ab(G).
  //!
  //! Every verdict is computed twice: from the conditions C1 and C2, and from
  //! the definitions (normality in the relevant tables and stability under
  //! the gamma maps).  A disagreement raises InternalError.
  class IdealClassifier {
   public:
    explicit IdealClassifier(GroupMap psi);

    GroupMap const& psi() const noexcept {
      return psi_;
    }

    FiniteGroup const& group() const noexcept {
      return psi_.domain();
    }

    //! The (additive, multiplicative) tables of a brace kind.
    std::pair<OpTable const&, OpTable const&> tables(BraceKind k) const noexcept;

    //! Throws PreconditionError if h is not a subgroup of this group.
    IdealVerdict classify(Subgroup const& h) const;

    bool c1(Subgroup const& h) const;
    bool c2(Subgroup const& h) const;

    //! H <= (G, M), H normal in (G, A), gamma(g)[H] inside H for all g.
    bool is_strong_left_ideal(BraceKind k, Subgroup const& h) const;
    //! A strong left ideal that is also normal in (G, M).
    bool is_ideal(BraceKind k, Subgroup const& h) const;

   private:
    GroupMap          psi_;
    std::vector<Elem> phi_;
    OpTable           dot_, dotop_, circ_, circop_;
  };

  IdealVerdict classify_subgroup(GroupMap const& psi, Subgroup const& h);

  struct NamedSubgroups {
    Subgroup ker;
    Subgroup fix;
    //! {h : phi(h) central}.
    Subgroup h_hat;
  };

  NamedSubgroups named_subgroups(GroupMap const& psi);

  //! ker psi . H1 for H1 <= fix psi; throws PreconditionError otherwise.
  Subgroup ker_times(GroupMap const& psi, Subgroup const& h1);

  //! ker psi . H1 for every subgroup H1 of fix psi, without duplicates, in
  //! canonical order.
  std::vector<Subgroup> ker_times_all(GroupMap const&          psi,
                                      EnumerationLimits const& lim = {});

  //! Verdicts for all subgroups of G, sorted canonically.  Requires
  //! |G| <= max_order.
  std::vector<IdealVerdict> find_strong_left_ideals(GroupMap const&          psi,
                                                    std::size_t              max_order = 64,
                                                    EnumerationLimits const& lim = {});

}  // namespace skb

#endif  // SKBRACE_IDEALS_HPP_
