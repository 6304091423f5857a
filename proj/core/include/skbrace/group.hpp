#ifndef SKBRACE_GROUP_HPP_
#define SKBRACE_GROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace skb {

  //! Index of an element of a finite group.  The identity is always 0.
  using Elem = std::uint32_t;

  //! Options shared by the group builders.
  struct GroupOptions {
    std::size_t   max_order = 10'000;
    std::uint64_t seed      = 0x5eed'b4ac'e5ULL;
    //! Explicit tables up to this order are checked for associativity on
    //! every triple; larger ones on `associativity_samples` random triples.
    std::size_t associativity_cap     = 200;
    std::size_t associativity_samples = 100'000;
  };

  //! How a group was assembled from smaller groups, if at all.
  enum class Structure { plain, direct_product, semidirect_product };

  class FiniteGroup;

  //! A finite group given by its full multiplication table.
  //!
  //! Instances are immutable and share their storage, so copies are cheap
  //! and compare equal when their tables agree.
  class FiniteGroup {
   public:
    //! The trivial group.
    FiniteGroup();

    //! Verifies and wraps an explicit table (row-major, `order` x `order`).
    //! Checks closure, identity at index 0, inverses, distinct names and
    //! associativity (exhaustive or sampled, see GroupOptions).  When
    //! `generators` is empty a generating set is chosen greedily.
    static FiniteGroup from_table(std::size_t                order,
                                  std::vector<Elem>          table,
                                  std::vector<std::string>   names,
                                  std::vector<Elem>          generators = {},
                                  GroupOptions const&        opts = {});

    std::size_t order() const noexcept {
      return data_->order;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return data_->mul[static_cast<std::size_t>(a) * data_->order + b];
    }

    Elem inv(Elem a) const noexcept {
      return data_->inv[a];
    }

    //! a * b^-1 and friends are common enough to warrant helpers.
    Elem mul(Elem a, Elem b, Elem c) const noexcept {
      return mul(mul(a, b), c);
    }

    Elem conj(Elem g, Elem h) const noexcept {  // g h g^-1
      return mul(mul(g, h), inv(g));
    }

    Elem commutator(Elem g, Elem h) const noexcept {  // g h g^-1 h^-1
      return mul(mul(g, h), mul(inv(g), inv(h)));
    }

    Elem power(Elem g, long long k) const;

    std::size_t element_order(Elem g) const;

    std::string const& name(Elem g) const {
      return data_->names[g];
    }

    std::span<std::string const> names() const noexcept {
      return data_->names;
    }

    std::optional<Elem> find(std::string_view name) const;

    //! As find, but throws PreconditionError for unknown names.
    Elem at(std::string_view name) const;

    std::span<Elem const> generators() const noexcept {
      return data_->generators;
    }

    std::span<Elem const> table() const noexcept {
      return data_->mul;
    }

    bool is_abelian() const noexcept {
      return data_->abelian;
    }

    Structure structure() const noexcept {
      return data_->structure;
    }

    //! Factors of a direct product (in coordinate order), or {base, acting}
    //! of a semidirect product.  Empty for plain groups.
    std::span<FiniteGroup const> factors() const noexcept {
      return data_->factors;
    }

    //! Coordinates of g in a direct or semidirect product.
    std::vector<Elem> coordinates(Elem g) const;

    //! Inverse of coordinates().
    Elem from_coordinates(std::span<Elem const> coords) const;

    std::vector<Elem> all_elements() const;

    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) noexcept;

    //! Internal constructor used by the builders (no verification beyond the
    //! inverse computation).
    struct Parts {
      std::size_t              order = 1;
      std::vector<Elem>        mul{0};
      std::vector<std::string> names{"e"};
      std::vector<Elem>        generators;
      Structure                structure = Structure::plain;
      std::vector<FiniteGroup> factors;
    };
    static FiniteGroup assemble(Parts parts);

   private:
    struct Data {
      std::size_t              order;
      std::vector<Elem>        mul;
      std::vector<Elem>        inv;
      std::vector<std::string> names;
      std::vector<Elem>        generators;
      bool                     abelian;
      Structure                structure;
      std::vector<FiniteGroup> factors;
    };

    explicit FiniteGroup(std::shared_ptr<Data const> d) : data_(std::move(d)) {}

    std::shared_ptr<Data const> data_;
  };

  //! Recursive description of a group to build; mirrors the GroupSpec JSON.
  struct GroupSpec {
    enum class Kind { cyclic, dihedral, symmetric, product, semidirect, table };

    Kind        kind = Kind::cyclic;
    std::size_t n    = 1;
    //! Optional renaming of the generator symbols: cyclic {"g"}, dihedral
    //! {"r", "s"}.
    std::vector<std::string> symbols;
    //! product: the factors; semidirect: {base, acting}.
    std::vector<GroupSpec> factors;
    //! semidirect: for each acting element, the image array of an
    //! automorphism of the base.
    std::vector<std::vector<Elem>> action;
    //! table: rows of the Cayley table.
    std::vector<std::vector<Elem>> mul;
    std::vector<Elem>              generators;
    //! Optional override of the element names (any kind).
    std::vector<std::string> names;
  };

  namespace groups {
    //! C_n = <g>; element i is g^i.
    FiniteGroup cyclic(std::size_t n, std::string symbol = "g");

    //! D_n of order 2n with presentation <r, s | r^n = s^2 = rsrs = e>.
    //! Elements 0..n-1 are r^i, elements n..2n-1 are r^i s.  Generators [r, s].
    FiniteGroup dihedral(std::size_t n,
                         std::string r = "r",
                         std::string s = "s");

    //! S_n on the points 1..n, elements in lexicographic order of their
    //! one-line notation (so the identity comes first).  Composition is
    //! right to left: (ab)(i) = a(b(i)).
    FiniteGroup symmetric(std::size_t n, GroupOptions const& opts = {});

    //! Direct product; element (i_0, i_1, ...) has index
    //! i_0 + o_0 (i_1 + o_1 (i_2 + ...)).
    FiniteGroup direct_product(std::span<FiniteGroup const> factors,
                               GroupOptions const&          opts = {});

    FiniteGroup direct_product(FiniteGroup const&  a,
                               FiniteGroup const&  b,
                               GroupOptions const& opts = {});

    //! base x| acting with (n, k)(n', k') = (n action[k](n'), k k'); element
    //! (n, k) has index n + |base| k.  The action is verified to consist of
    //! automorphisms and to be a homomorphism acting -> Aut(base).
    FiniteGroup semidirect_product(FiniteGroup const&                    base,
                                   FiniteGroup const&                    acting,
                                   std::vector<std::vector<Elem>> const& action,
                                   GroupOptions const& opts = {});

    //! Lexicographic rank of a permutation of {0, .., n-1} (one-line
    //! notation, 0-based); equals its index in symmetric(n).
    Elem permutation_rank(std::span<Elem const> perm);

    //! Inverse of permutation_rank.
    std::vector<Elem> permutation_unrank(std::size_t n, Elem rank);

    FiniteGroup build(GroupSpec const& spec, GroupOptions const& opts = {});
  }  // namespace groups

  //! A subgroup of a FiniteGroup, stored as its sorted member set.
  class Subgroup {
   public:
    //! Smallest subgroup containing gens.
    static Subgroup generated(FiniteGroup const& g, std::span<Elem const> gens);

    //! Verifies that members (any order, no duplicates needed) is a subgroup.
    static Subgroup from_members(FiniteGroup const& g, std::vector<Elem> members);

    static Subgroup trivial(FiniteGroup const& g);
    static Subgroup whole(FiniteGroup const& g);

    FiniteGroup const& parent() const noexcept {
      return parent_;
    }

    std::span<Elem const> members() const noexcept {
      return members_;
    }

    //! A generating set (not necessarily minimal).
    std::span<Elem const> generators() const noexcept {
      return gens_;
    }

    std::size_t order() const noexcept {
      return members_.size();
    }

    bool contains(Elem g) const noexcept {
      return member_[g] != 0;
    }

    bool is_subset_of(Subgroup const& other) const;

    //! The subgroup as a standalone group; element i is members()[i].
    FiniteGroup as_group() const;

    //! Position of a member inside members().
    Elem local_index(Elem g) const;

    friend bool operator==(Subgroup const& a, Subgroup const& b) noexcept {
      return a.members_ == b.members_;
    }

    //! Canonical order: by order, then by member set.
    friend bool operator<(Subgroup const& a, Subgroup const& b) noexcept {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return a.members_ < b.members_;
    }

   private:
    Subgroup(FiniteGroup             g,
             std::vector<Elem>       members,
             std::vector<Elem>       gens,
             std::vector<std::uint8_t> flags)
        : parent_(std::move(g)),
          members_(std::move(members)),
          gens_(std::move(gens)),
          member_(std::move(flags)) {}

    FiniteGroup               parent_;
    std::vector<Elem>         members_;
    std::vector<Elem>         gens_;
    std::vector<std::uint8_t> member_;
  };

  //! Left cosets gH of a subgroup.
  struct CosetSpace {
    FiniteGroup       parent;
    Subgroup          subgroup;
    std::vector<Elem> coset_of;
    //! Minimal element of each coset; cosets are numbered in increasing
    //! order of their representative.
    std::vector<Elem> representatives;

    std::size_t size() const noexcept {
      return representatives.size();
    }
  };

  struct EnumerationLimits {
    //! Maximum number of subgroup closures performed.
    std::size_t max_closures = 1'000'000;
    //! When nonzero, only subgroups whose order divides this are produced
    //! (and explored).
    std::size_t order_divides = 0;
  };

  //! Every subgroup exactly once, sorted canonically.
  std::vector<Subgroup> enumerate_subgroups(FiniteGroup const&       g,
                                            EnumerationLimits const& lim = {});

  //! g h g^-1 in H for all g in G and h in H.
  bool is_normal(FiniteGroup const& g, Subgroup const& h);

  Subgroup center(FiniteGroup const& g);

  //! [g, s] in H for every g in G and s in S.  Since these commutators
  //! generate [G, S], this decides [G, S] <= H.
  bool commutator_condition(FiniteGroup const&    g,
                            std::span<Elem const> s,
                            Subgroup const&       h);

  CosetSpace coset_space(FiniteGroup const& g, Subgroup const& h);

}  // namespace skb

#endif  // SKBRACE_GROUP_HPP_
