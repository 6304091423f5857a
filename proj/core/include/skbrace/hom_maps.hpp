#ifndef SKBRACE_HOM_MAPS_HPP_
#define SKBRACE_HOM_MAPS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "skbrace/group.hpp"

namespace skb {

  struct MapFlags {
    bool is_hom        = false;
    bool abelian_image = false;
    //! Only set for endomorphisms.
    std::optional<bool> idempotent;
    std::optional<bool> fixed_point_free;
  };

  //! A total function between finite groups, stored element-wise.
  class GroupMap {
   public:
    //! Stores the map and computes its flags; never rejects a map that is not
    //! a homomorphism (use make_map for that).
    static GroupMap tabulate(FiniteGroup       domain,
                             FiniteGroup       codomain,
                             std::vector<Elem> image,
                             std::string       builder);

    FiniteGroup const& domain() const noexcept {
      return domain_;
    }

    FiniteGroup const& codomain() const noexcept {
      return codomain_;
    }

    Elem operator()(Elem g) const noexcept {
      return image_[g];
    }

    std::span<Elem const> image() const noexcept {
      return image_;
    }

    MapFlags const& flags() const noexcept {
      return flags_;
    }

    std::string const& builder() const noexcept {
      return builder_;
    }

    bool is_endomorphism() const noexcept {
      return domain_ == codomain_;
    }

    //! Homomorphism with abelian image, i.e. a member of Ab(G, G').
    bool is_abelian_map() const noexcept {
      return flags_.is_hom && flags_.abelian_image;
    }

    friend bool operator==(GroupMap const& a, GroupMap const& b) noexcept {
      return a.image_ == b.image_ && a.domain_ == b.domain_
             && a.codomain_ == b.codomain_;
    }

   private:
    GroupMap(FiniteGroup d, FiniteGroup c, std::vector<Elem> im, std::string b)
        : domain_(std::move(d)),
          codomain_(std::move(c)),
          image_(std::move(im)),
          builder_(std::move(b)) {}

    FiniteGroup       domain_;
    FiniteGroup       codomain_;
    std::vector<Elem> image_;
    MapFlags          flags_;
    std::string       builder_;
  };

  //! Homomorphism from the full image array; throws PreconditionError if it
  //! is not one.
  GroupMap make_map(FiniteGroup const& domain,
                    FiniteGroup const& codomain,
                    std::vector<Elem>  image,
                    std::string        builder = "image_array");

  //! Homomorphism determined by the images of a generating set
  //! (source, image) pairs.  The assignment is extended along words and
  //! checked for consistency, then verified on the full table.
  GroupMap make_map(FiniteGroup const&                  domain,
                    FiniteGroup const&                  codomain,
                    std::span<std::pair<Elem, Elem> const> assignment,
                    std::string builder = "generator_images");

  GroupMap identity_map(FiniteGroup const& g);
  GroupMap trivial_map(FiniteGroup const& domain, FiniteGroup const& codomain);

  //! g -> f(g(x)).
  GroupMap compose(GroupMap const& f, GroupMap const& g);

  struct AbelianMapOptions {
    //! Upper bound on |G'|^(number of generators of G).
    double max_candidates = 1e8;
  };

  //! Ab(G, G'): every homomorphism with abelian image, each once, in
  //! lexicographic order of the generator images.
  std::vector<GroupMap> enumerate_abelian_maps(FiniteGroup const&       domain,
                                               FiniteGroup const&       codomain,
                                               AbelianMapOptions const& opts = {});

  struct MapAnalysis {
    Subgroup kernel;
    Subgroup image;
    //! Endomorphisms only.
    std::optional<Subgroup> fix;
    std::optional<bool>     idempotent;
    std::optional<bool>     fixed_point_free;
  };

  MapAnalysis map_analysis(GroupMap const& f);

  //! fix(psi) = {g : psi(g) = g}, verified to be a subgroup of (G, .).
  Subgroup fixed_subgroup(GroupMap const& psi);

  //! phi(g) = g psi(g^-1) for psi in Ab(G).  phi is a homomorphism from the
  //! circle group (G, o) to (G, .) whose kernel is fix(psi).
  class PhiMap {
   public:
    GroupMap const& psi() const noexcept {
      return psi_;
    }

    Elem operator()(Elem g) const noexcept {
      return image_[g];
    }

    std::span<Elem const> values() const noexcept {
      return image_;
    }

    //! phi(G) as a subgroup of (G, .).
    Subgroup image_subgroup() const;

    //! The image of a subset, sorted and without duplicates.
    std::vector<Elem> image_of(std::span<Elem const> subset) const;

   private:
    friend PhiMap phi_of(GroupMap const& psi);
    PhiMap(GroupMap p, std::vector<Elem> im)
        : psi_(std::move(p)), image_(std::move(im)) {}

    GroupMap          psi_;
    std::vector<Elem> image_;
  };

  //! Builds phi and checks phi(g o h) = phi(g) phi(h) and ker phi = fix psi.
  PhiMap phi_of(GroupMap const& psi);

  //! The element-wise map g -> phi(g) without any verification.
  std::vector<Elem> phi_values(GroupMap const& psi);

  //! n-fold composite of phi (phi^0 = identity).
  std::vector<Elem> phi_power(GroupMap const& psi, std::size_t n);

  //! psi_0 trivial, psi_n(g) = psi(g) psi_{n-1}(phi(g)).  The result is
  //! checked to lie in Ab(G).
  GroupMap psi_iterate(GroupMap const& psi,
                       std::size_t     n,
                       std::size_t     bound = 32);

  //! On G1 x G2: (g1, g2) -> (beta(g2), alpha(g1)) for alpha in Ab(G1, G2),
  //! beta in Ab(G2, G1).
  GroupMap product_swap_map(GroupMap const& alpha, GroupMap const& beta);

  //! On the product of G_0, .., G_{n-1}: coordinate i of the image is
  //! alpha_{i-1}(g_{i-1}) for alpha_i in Ab(G_i, G_{i+1}), indices mod n.
  GroupMap cyclic_chain_map(std::span<GroupMap const> maps);

  //! a -> left translation by a, into the symmetric group on A's indices
  //! (point i+1 of the symmetric group is element i of A).
  GroupMap left_regular_map(FiniteGroup const& a);

}  // namespace skb

#endif  // SKBRACE_HOM_MAPS_HPP_
