#ifndef SEMICOH_TESTS_HELPERS_HPP_
#define SEMICOH_TESTS_HELPERS_HPP_

#include <random>
#include <string>

#include "semicoh/io.hpp"

namespace semicoh::test {

  inline PartialMap pm(std::string const& s) {
    return parse_partial_map(s);
  }
  inline Partition pt(std::string const& s) {
    return parse_partition(s);
  }
  inline NF nf(std::string const& s) {
    return parse_nf_or_word(s);
  }

  inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  inline NF random_nf(std::mt19937_64& rng, int max_excluded, std::int64_t radius) {
    std::vector<std::int64_t> ex;
    for (auto i = uniform(rng, 0, max_excluded); i > 0; --i) {
      ex.push_back(uniform(rng, -radius, radius));
    }
    return NF(std::move(ex), uniform(rng, -radius, radius));
  }

}  // namespace semicoh::test

#endif  // SEMICOH_TESTS_HELPERS_HPP_
