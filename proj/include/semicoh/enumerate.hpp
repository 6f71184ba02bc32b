// Exhaustive, duplicate-free enumeration of the small monoids T_n, PT_n, I_n
// and P_n, used by the brute-force oracles.

#ifndef SEMICOH_ENUMERATE_HPP_
#define SEMICOH_ENUMERATE_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <stdexcept>  // for runtime_error
#include <vector>     // for vector

#include "partial_map.hpp"  // for PartialMap, Kind
#include "partition.hpp"    // for Partition

namespace semicoh {

  inline constexpr std::uint64_t DEFAULT_ENUMERATION_CAP = 1'000'000;

  class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! n^n, (n+1)^n, sum_k C(n,k)^2 k!, or Bell(2n); saturates at UINT64_MAX.
  std::uint64_t element_count(Kind kind, std::size_t n);

  //! Lexicographic order on image vectors with "undefined" smallest.
  //! Throws std::invalid_argument for Kind::P and CapExceeded when the
  //! predicted count exceeds `cap`.
  std::vector<PartialMap> enumerate_maps(Kind kind, std::size_t n,
                                         std::uint64_t cap = DEFAULT_ENUMERATION_CAP);

  //! Lexicographic order on canonical block-label vectors.
  std::vector<Partition> enumerate_partitions(std::size_t   n,
                                              std::uint64_t cap = DEFAULT_ENUMERATION_CAP);

}  // namespace semicoh

#endif  // SEMICOH_ENUMERATE_HPP_
