// Equivalence relations on subsets of a finite ground set {0, ..., n-1}.

#ifndef SEMICOH_EQREL_HPP_
#define SEMICOH_EQREL_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int32_t
#include <vector>   // for vector

namespace semicoh {

  //! Disjoint-set forest with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x);
    //! Returns true iff the two classes were distinct before the call.
    bool unite(std::size_t x, std::size_t y);
    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _rank;
  };

  using Block = std::vector<std::size_t>;

  //! An equivalence relation whose carrier is a subset of a ground set.
  //!
  //! Classes are labelled canonically: scanning points in increasing order,
  //! each new class receives the next label. Points outside the carrier carry
  //! the label -1. Two relations are equal iff their label vectors are.
  class EqRel {
   public:
    EqRel() = default;

    //! The equality relation on the whole ground set.
    static EqRel identity(std::size_t ground);
    //! The equality relation on `carrier`.
    static EqRel identity_on(std::size_t ground, std::vector<bool> const& carrier);
    //! The universal relation on the whole ground set.
    static EqRel universal(std::size_t ground);
    //! Builds a relation from arbitrary (not necessarily canonical) labels;
    //! negative labels mark points outside the carrier.
    static EqRel from_labels(std::vector<std::int32_t> const& labels);
    static EqRel from_blocks(std::size_t ground, std::vector<Block> const& blocks);

    std::size_t ground() const noexcept {
      return _label.size();
    }
    bool in_carrier(std::size_t x) const {
      return _label[x] >= 0;
    }
    std::vector<bool> carrier() const;
    std::size_t number_of_classes() const noexcept {
      return _classes;
    }
    std::int32_t label(std::size_t x) const {
      return _label[x];
    }
    std::vector<std::int32_t> const& labels() const noexcept {
      return _label;
    }

    //! True iff both points are in the carrier and in the same class.
    bool related(std::size_t x, std::size_t y) const;

    //! Classes sorted by minimum element; each class sorted.
    std::vector<Block> classes() const;

    //! Pair containment: every related pair of *this is related in `other`.
    bool subset_of(EqRel const& other) const;

    //! The relation restricted to `subset` (carrier becomes the intersection).
    EqRel restrict_to(std::vector<bool> const& subset) const;

    bool operator==(EqRel const& that) const = default;

   private:
    explicit EqRel(std::vector<std::int32_t> labels);

    std::vector<std::int32_t> _label;
    std::size_t               _classes = 0;
  };

  //! The smallest equivalence on the union of the carriers containing both.
  //! Throws std::invalid_argument if the ground sets differ.
  EqRel join(EqRel const& r, EqRel const& s);

}  // namespace semicoh

#endif  // SEMICOH_EQREL_HPP_
