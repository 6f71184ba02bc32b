#include "semicoh/enumerate.hpp"

#include <algorithm>  // for max
#include <limits>   // for numeric_limits
#include <string>   // for to_string
#include <utility>  // for move

namespace semicoh {

  namespace {
    constexpr std::uint64_t SATURATED = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > SATURATED / a) {
        return SATURATED;
      }
      return a * b;
    }

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
      return b > SATURATED - a ? SATURATED : a + b;
    }

    std::uint64_t bell(std::size_t m) {
      // Bell triangle
      std::vector<std::uint64_t> row{1};
      for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row) {
          next.push_back(sat_add(next.back(), x));
        }
        row = std::move(next);
      }
      return row.front();
    }

    void check_cap(Kind kind, std::size_t n, std::uint64_t cap) {
      auto const count = element_count(kind, n);
      if (count > cap) {
        throw CapExceeded(std::string("enumeration of ") + kind_name(kind) + "_"
                          + std::to_string(n) + " exceeds the cap of " + std::to_string(cap)
                          + " elements");
      }
    }
  }  // namespace

  std::uint64_t element_count(Kind kind, std::size_t n) {
    switch (kind) {
      case Kind::T:
      case Kind::PT: {
        std::uint64_t const base = kind == Kind::T ? n : n + 1;
        std::uint64_t       out  = 1;
        for (std::size_t i = 0; i < n; ++i) {
          out = sat_mul(out, base);
        }
        return out;
      }
      case Kind::I: {
        // sum_k C(n,k)^2 k!
        std::uint64_t out = 0, binom = 1, fact = 1;
        for (std::size_t k = 0; k <= n; ++k) {
          if (k > 0) {
            binom = sat_mul(binom, n - k + 1) / k;
            fact  = sat_mul(fact, k);
          }
          out = sat_add(out, sat_mul(sat_mul(binom, binom), fact));
        }
        return out;
      }
      case Kind::P:
        return bell(2 * n);
    }
    return 0;
  }

  std::vector<PartialMap> enumerate_maps(Kind kind, std::size_t n, std::uint64_t cap) {
    if (kind == Kind::P) {
      throw std::invalid_argument("enumerate_maps called with kind P");
    }
    check_cap(kind, n, cap);
    std::int32_t const lo = kind == Kind::T ? 0 : PartialMap::UNDEFINED;
    bool const         injective = kind == Kind::I;

    std::vector<PartialMap>   out;
    std::vector<std::int32_t> im(n, lo);
    std::vector<int>          used(n, 0);
    // depth-first over positions; values ascend from lo to n-1
    std::size_t pos = 0;
    if (n == 0) {
      out.emplace_back(im);
      return out;
    }
    im[0] = lo - 1;
    while (true) {
      auto& v = im[pos];
      if (v >= 0 && injective) {
        --used[static_cast<std::size_t>(v)];
      }
      ++v;
      while (injective && v >= 0 && v < static_cast<std::int32_t>(n)
             && used[static_cast<std::size_t>(v)] > 0) {
        ++v;
      }
      if (v >= static_cast<std::int32_t>(n)) {
        if (pos == 0) {
          break;
        }
        --pos;
        continue;
      }
      if (v >= 0 && injective) {
        ++used[static_cast<std::size_t>(v)];
      }
      if (pos + 1 == n) {
        out.emplace_back(im);
      } else {
        ++pos;
        im[pos] = lo - 1;
      }
    }
    return out;
  }

  std::vector<Partition> enumerate_partitions(std::size_t n, std::uint64_t cap) {
    check_cap(Kind::P, n, cap);
    std::size_t const      m = 2 * n;
    std::vector<Partition> out;
    if (m == 0) {
      out.emplace_back(std::vector<std::uint32_t>{});
      return out;
    }
    // restricted growth strings: s[0] = 0, s[i] <= 1 + max(s[0..i-1])
    std::vector<std::uint32_t> s(m, 0);
    std::vector<std::uint32_t> prefix_max(m, 0);
    while (true) {
      out.emplace_back(s);
      std::size_t i = m - 1;
      while (i > 0 && s[i] == prefix_max[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++s[i];
      prefix_max[i] = std::max(prefix_max[i - 1], s[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        s[j]          = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
    return out;
  }

}  // namespace semicoh
