// Set partitions of {0, ..., n-1} u {0', ..., (n-1)'}, the elements of the
// partition monoid. Point x' is stored at index n + x.

#ifndef SEMICOH_PARTITION_HPP_
#define SEMICOH_PARTITION_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <functional>  // for hash
#include <vector>      // for vector

#include "eqrel.hpp"        // for EqRel, Block
#include "partial_map.hpp"  // for PartialMap

namespace semicoh {

  class Partition {
   public:
    Partition() = default;

    //! Builds a partition from a block label for each of the 2n points.
    //! Labels are arbitrary non-negative integers; they are canonicalised.
    //! Throws std::invalid_argument if the number of labels is odd.
    explicit Partition(std::vector<std::uint32_t> const& labels);
    //! Throws std::invalid_argument unless the blocks partition all 2n points.
    static Partition from_blocks(std::size_t n, std::vector<Block> const& blocks);

    static Partition identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _label.size() / 2;
    }
    //! Canonical block label of each point; blocks are numbered in order of
    //! their minimum point.
    std::vector<std::uint32_t> const& labels() const noexcept {
      return _label;
    }
    std::size_t number_of_blocks() const noexcept {
      return _blocks;
    }
    //! Blocks ordered by minimum point, each sorted.
    std::vector<Block> blocks() const;

    bool operator==(Partition const&) const = default;
    auto operator<=>(Partition const&) const = default;

   private:
    std::vector<std::uint32_t> _label;
    std::size_t                _blocks = 0;
  };

  //! Product via connected components of the stacked three-row graph.
  //! Throws std::invalid_argument on a degree mismatch.
  Partition compose(Partition const& a, Partition const& b);

  inline Partition operator*(Partition const& a, Partition const& b) {
    return compose(a, b);
  }

  //! Swaps the top and bottom rows.
  Partition star(Partition const& a);

  enum class BlockType { upper, lower, transversal };

  //! Classifies a block given as point indices in [0, 2n).
  BlockType block_type(Block const& block, std::size_t n);

  struct PartitionProfile {
    //! Upper points lying in a transversal.
    std::vector<bool> dom;
    //! Lower points lying in a transversal, indexed 0..n-1.
    std::vector<bool> codom;
    //! Partition induced on the upper row.
    EqRel ker;
    //! Partition induced on the lower row, indexed 0..n-1.
    EqRel coker;
    //! Upper blocks (points 0..n-1).
    std::vector<Block> upper;
    //! Lower blocks, as point indices n..2n-1.
    std::vector<Block> lower;
  };

  PartitionProfile profile(Partition const& a);

  //! A partial bijection viewed as a partition: transversals {x, (xa)'} and
  //! singletons elsewhere. Throws if the map is not injective.
  Partition embed_i_to_p(PartialMap const& a);

}  // namespace semicoh

template <>
struct std::hash<semicoh::Partition> {
  std::size_t operator()(semicoh::Partition const& a) const noexcept {
    std::size_t h = a.degree();
    for (auto x : a.labels()) {
      h = h * 37 + x;
    }
    return h;
  }
};

#endif  // SEMICOH_PARTITION_HPP_
