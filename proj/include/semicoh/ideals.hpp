// Generators for intersections of principal one-sided ideals in T_n, PT_n,
// I_n and P_n, with a brute-force check against the enumerated monoid.

#ifndef SEMICOH_IDEALS_HPP_
#define SEMICOH_IDEALS_HPP_

#include <algorithm>  // for set_intersection
#include <cstddef>    // for size_t
#include <iterator>   // for back_inserter
#include <optional>   // for optional
#include <vector>     // for vector

#include "finite_monoid.hpp"  // for FiniteMonoid
#include "order.hpp"          // for Side
#include "partial_map.hpp"    // for PartialMap, Kind
#include "partition.hpp"      // for Partition

namespace semicoh {

  //! Either a generator of the intersection or the verdict that it is empty.
  template <typename E>
  struct MeetResult {
    std::optional<E> generator;

    bool empty() const noexcept {
      return !generator.has_value();
    }
  };

  //! aS n bS = eS where dom e is the union Y of the classes of
  //! ker a v ker b inside dom a n dom b, and each class of the join on Y is
  //! sent to its minimum. Valid in PT_n, T_n and I_n; never empty.
  MeetResult<PartialMap> meet_right_pt(PartialMap const& a, PartialMap const& b);

  //! Sa n Sb = Se with im e = im a n im b. In PT_n and I_n, e is the partial
  //! identity on that set. In T_n the intersection is empty when the images
  //! are disjoint, and otherwise e fixes the common image and sends every
  //! other point to its minimum.
  MeetResult<PartialMap> meet_left(Kind kind, PartialMap const& a, PartialMap const& b);

  //! aP n bP in the partition monoid. Empty unless the upper blocks of a and b
  //! pairwise coincide or are disjoint and no kernel class of a or b straddles
  //! the union Y of those blocks. Otherwise the generator has the upper blocks
  //! of both, a transversal Z u {z'} with z = min Z for each class Z of the
  //! kernel join off Y, and singleton lower blocks elsewhere.
  MeetResult<Partition> meet_right_partition(Partition const& a, Partition const& b);

  //! Left-hand dual of meet_right_partition, through the star involution.
  MeetResult<Partition> meet_left_partition(Partition const& a, Partition const& b);

  //! Brute-force intersection aS n bS (or Sa n Sb) as a sorted index list.
  template <MonoidElement E>
  std::vector<std::size_t> ideal_intersection(FiniteMonoid<E> const& S, std::size_t a,
                                              std::size_t b, Side side) {
    auto const x = side == Side::right ? S.right_ideal(a) : S.left_ideal(a);
    auto const y = side == Side::right ? S.right_ideal(b) : S.left_ideal(b);
    std::vector<std::size_t> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  }

  //! True iff the claimed meet agrees with the enumerated intersection.
  //! Throws std::out_of_range if an element is not in S.
  template <MonoidElement E>
  bool verify_meet(FiniteMonoid<E> const& S, E const& a, E const& b,
                   MeetResult<E> const& result, Side side) {
    auto const meet = ideal_intersection(S, S.index(a), S.index(b), side);
    if (result.empty()) {
      return meet.empty();
    }
    auto const g = S.index(*result.generator);
    return meet == (side == Side::right ? S.right_ideal(g) : S.left_ideal(g));
  }

}  // namespace semicoh

#endif  // SEMICOH_IDEALS_HPP_
