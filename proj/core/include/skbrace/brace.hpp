#ifndef SKBRACE_BRACE_HPP_
#define SKBRACE_BRACE_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "skbrace/group.hpp"
#include "skbrace/hom_maps.hpp"
#include "skbrace/sweep.hpp"

namespace skb {

  //! A binary operation on {0, .., order-1}, optionally verified to be a
  //! group operation with identity 0.
  class OpTable {
   public:
    //! Verifies the group axioms (closure, identity 0, inverses,
    //! associativity on all triples up to the sweep cap, sampled above).
    //! Throws PreconditionError on failure.
    static OpTable group(std::size_t         order,
                         std::vector<Elem>   table,
                         std::string         label,
                         SweepOptions const& sweep = default_sweep());

    //! An unverified table (is_group() is false).
    static OpTable raw(std::size_t order, std::vector<Elem> table, std::string label);

    //! The multiplication of g.
    static OpTable of(FiniteGroup const& g, std::string label = "·");

    std::size_t order() const noexcept {
      return order_;
    }

    Elem op(Elem a, Elem b) const noexcept {
      return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    Elem op(Elem a, Elem b, Elem c) const noexcept {
      return op(op(a, b), c);
    }

    bool is_group() const noexcept {
      return !inverse_.empty();
    }

    //! Requires is_group().
    Elem inverse(Elem a) const noexcept {
      return inverse_[a];
    }

    std::string const& label() const noexcept {
      return label_;
    }

    std::span<Elem const> table() const noexcept {
      return table_;
    }

    OpTable relabeled(std::string label) const;

    //! The group (requires is_group()); element names are taken from
    //! `names` when given, else the indices.
    FiniteGroup as_group(std::span<std::string const> names = {}) const;

    //! Description of the first violated group axiom, if any.
    std::optional<std::string> group_defect(SweepOptions const& sweep = default_sweep()) const;

    friend bool operator==(OpTable const& a, OpTable const& b) noexcept {
      return a.order_ == b.order_ && a.table_ == b.table_;
    }

   private:
    OpTable(std::size_t n, std::vector<Elem> t, std::string l)
        : order_(n), table_(std::move(t)), label_(std::move(l)) {}

    std::size_t       order_;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::string       label_;
  };

  struct BraceReport {
    bool holds   = true;
    bool sampled = false;
    //! First failing (g, h, k) in lexicographic order (sampling order when
    //! sampled).
    std::optional<std::array<Elem, 3>> failure;
  };

  //! Checks g o (h . k) = (g o h) . g^-1 . (g o k) where . is `additive`,
  //! o is `multiplicative` and g^-1 the additive inverse.
  BraceReport verify_brace(OpTable const&      additive,
                           OpTable const&      multiplicative,
                           SweepOptions const& sweep = default_sweep());

  //! One carrier with two group tables satisfying the brace relation.
  class SkewBrace {
   public:
    //! Throws PreconditionError unless both tables are groups on the same
    //! carrier satisfying the brace relation.
    static SkewBrace make(OpTable                 additive,
                          OpTable                 multiplicative,
                          std::optional<GroupMap> psi   = std::nullopt,
                          SweepOptions const&     sweep = default_sweep());

    OpTable const& additive() const noexcept {
      return additive_;
    }

    OpTable const& multiplicative() const noexcept {
      return multiplicative_;
    }

    std::optional<GroupMap> const& psi() const noexcept {
      return psi_;
    }

    std::size_t order() const noexcept {
      return additive_.order();
    }

    BraceReport const& report() const noexcept {
      return report_;
    }

   private:
    SkewBrace(OpTable a, OpTable m, std::optional<GroupMap> p, BraceReport r)
        : additive_(std::move(a)),
          multiplicative_(std::move(m)),
          psi_(std::move(p)),
          report_(r) {}

    OpTable                 additive_;
    OpTable                 multiplicative_;
    std::optional<GroupMap> psi_;
    BraceReport             report_;
  };

  //! g o h = g psi(g^-1) h psi(g) for psi in Ab(G).
  OpTable circle_table(FiniteGroup const&  g,
                       GroupMap const&     psi,
                       std::string         label = "∘",
                       SweepOptions const& sweep = default_sweep());

  //! The inverse of g in (G, o): psi(g) g^-1 psi(g^-1).
  Elem circle_inverse(FiniteGroup const& g, GroupMap const& psi, Elem x);

  //! a .' b = b . a; the label gains a prime.
  OpTable opposite_table(OpTable const& t);

  //! The brace (G, ., o) of psi.
  SkewBrace brace_from_map(FiniteGroup const&  g,
                           GroupMap const&     psi,
                           SweepOptions const& sweep = default_sweep());

  //! gamma(g)[h] = g^-1 + (g o h) where + is the additive operation; each
  //! gamma(g) is checked to be an additive automorphism and g -> gamma(g) a
  //! homomorphism out of the multiplicative group.
  std::vector<std::vector<Elem>> gamma_family(SkewBrace const& b);

  //! The tables o_0, .., o_N built from psi_n; o_0 is the multiplication of
  //! G.  Every pair (o_m, o_n) is verified to be a brace.
  std::vector<OpTable> brace_block(GroupMap const&     psi,
                                   std::size_t         n,
                                   std::size_t         bound = 8,
                                   SweepOptions const& sweep = default_sweep());

  //! Both operations induced on the left cosets of `members`; throws
  //! PreconditionError when either operation is not well defined there.
  SkewBrace quotient_brace(SkewBrace const&      b,
                           std::span<Elem const> members,
                           SweepOptions const&   sweep = default_sweep());

}  // namespace skb

#endif  // SKBRACE_BRACE_HPP_
