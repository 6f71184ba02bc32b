#include "semicoh/partition.hpp"

#include <algorithm>      // for includes, sort
#include <limits>         // for numeric_limits
#include <stdexcept>      // for invalid_argument
#include <unordered_map>  // for unordered_map

namespace semicoh {

  namespace {
    constexpr std::uint32_t UNSET = std::numeric_limits<std::uint32_t>::max();
  }  // namespace

  Partition::Partition(std::vector<std::uint32_t> const& labels) : _label(labels.size()) {
    if (labels.size() % 2 != 0) {
      throw std::invalid_argument("a partition needs an even number of points");
    }
    std::unordered_map<std::uint32_t, std::uint32_t> fresh;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = fresh.emplace(labels[x], static_cast<std::uint32_t>(fresh.size()));
      _label[x]           = it->second;
    }
    _blocks = fresh.size();
  }

  Partition Partition::from_blocks(std::size_t n, std::vector<Block> const& blocks) {
    std::vector<std::uint32_t> labels(2 * n, UNSET);
    std::uint32_t              next = 0;
    for (auto const& b : blocks) {
      if (b.empty()) {
        throw std::invalid_argument("empty block");
      }
      for (auto x : b) {
        if (x >= 2 * n) {
          throw std::invalid_argument("point outside the ground set");
        }
        if (labels[x] != UNSET) {
          throw std::invalid_argument("point occurs in more than one block");
        }
        labels[x] = next;
      }
      ++next;
    }
    for (auto l : labels) {
      if (l == UNSET) {
        throw std::invalid_argument("blocks do not cover every point");
      }
    }
    return Partition(labels);
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = labels[n + x] = static_cast<std::uint32_t>(x);
    }
    return Partition(labels);
  }

  std::vector<Block> Partition::blocks() const {
    std::vector<Block> out(_blocks);
    for (std::size_t x = 0; x < _label.size(); ++x) {
      out[_label[x]].push_back(x);
    }
    return out;
  }

  Partition compose(Partition const& a, Partition const& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("product of partitions of different degrees");
    }
    std::size_t const n = a.degree();
    // rows: top [0, n), middle [n, 2n), bottom [2n, 3n)
    UnionFind                  uf(3 * n);
    std::vector<std::size_t>   first(a.number_of_blocks(), UNSET);
    for (std::size_t x = 0; x < 2 * n; ++x) {
      auto& f = first[a.labels()[x]];
      if (f == UNSET) {
        f = x;
      } else {
        uf.unite(f, x);
      }
    }
    first.assign(b.number_of_blocks(), UNSET);
    for (std::size_t x = 0; x < 2 * n; ++x) {
      auto& f = first[b.labels()[x]];
      if (f == UNSET) {
        f = x + n;
      } else {
        uf.unite(f, x + n);
      }
    }
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x]     = static_cast<std::uint32_t>(uf.find(x));
      labels[n + x] = static_cast<std::uint32_t>(uf.find(2 * n + x));
    }
    return Partition(labels);
  }

  Partition star(Partition const& a) {
    std::size_t const          n = a.degree();
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x]     = a.labels()[n + x];
      labels[n + x] = a.labels()[x];
    }
    return Partition(labels);
  }

  BlockType block_type(Block const& block, std::size_t n) {
    bool up = false, down = false;
    for (auto x : block) {
      (x < n ? up : down) = true;
    }
    return up && down ? BlockType::transversal : (up ? BlockType::upper : BlockType::lower);
  }

  PartitionProfile profile(Partition const& a) {
    std::size_t const         n = a.degree();
    PartitionProfile          out;
    std::vector<std::int32_t> ker(n), coker(n);
    out.dom.assign(n, false);
    out.codom.assign(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      ker[x]   = static_cast<std::int32_t>(a.labels()[x]);
      coker[x] = static_cast<std::int32_t>(a.labels()[n + x]);
    }
    out.ker   = EqRel::from_labels(ker);
    out.coker = EqRel::from_labels(coker);
    for (auto& b : a.blocks()) {
      switch (block_type(b, n)) {
        case BlockType::upper:
          out.upper.push_back(std::move(b));
          break;
        case BlockType::lower:
          out.lower.push_back(std::move(b));
          break;
        case BlockType::transversal:
          for (auto x : b) {
            (x < n ? out.dom[x] : out.codom[x - n]) = true;
          }
          break;
      }
    }
    return out;
  }

  Partition embed_i_to_p(PartialMap const& a) {
    if (!a.is_injective()) {
      throw std::invalid_argument("I -> P embedding applied to a non-injective map");
    }
    std::size_t const          n = a.degree();
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t x = 0; x < 2 * n; ++x) {
      labels[x] = static_cast<std::uint32_t>(x);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (a.defined(x)) {
        labels[n + static_cast<std::size_t>(a[x])] = static_cast<std::uint32_t>(x);
      }
    }
    return Partition(labels);
  }

}  // namespace semicoh
