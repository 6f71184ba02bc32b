// The full monoids T_n, PT_n, I_n and P_n as FiniteMonoid objects.

#ifndef SEMICOH_MONOIDS_HPP_
#define SEMICOH_MONOIDS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t

#include "enumerate.hpp"      // for enumerate_maps, enumerate_partitions
#include "finite_monoid.hpp"  // for FiniteMonoid
#include "partial_map.hpp"    // for PartialMap, Kind
#include "partition.hpp"      // for Partition

namespace semicoh {

  //! Elements in enumeration order with the identity moved to index 0.
  inline FiniteMonoid<PartialMap> map_monoid(Kind kind, std::size_t n,
                                             std::uint64_t cap = DEFAULT_ENUMERATION_CAP) {
    return FiniteMonoid<PartialMap>::from_elements(n, enumerate_maps(kind, n, cap));
  }

  inline FiniteMonoid<Partition> partition_monoid(std::size_t   n,
                                                  std::uint64_t cap = DEFAULT_ENUMERATION_CAP) {
    return FiniteMonoid<Partition>::from_elements(n, enumerate_partitions(n, cap));
  }

}  // namespace semicoh

#endif  // SEMICOH_MONOIDS_HPP_
