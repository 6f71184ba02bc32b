#include "semicoh/eqrel.hpp"

#include <numeric>    // for iota
#include <stdexcept>  // for invalid_argument
#include <unordered_map>  // for unordered_map
#include <utility>    // for swap

namespace semicoh {

  UnionFind::UnionFind(std::size_t n) : _parent(n), _rank(n, 0) {
    std::iota(_parent.begin(), _parent.end(), 0);
  }

  std::size_t UnionFind::find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool UnionFind::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_rank[x] < _rank[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    if (_rank[x] == _rank[y]) {
      ++_rank[x];
    }
    return true;
  }

  EqRel::EqRel(std::vector<std::int32_t> labels) : _label(std::move(labels)) {
    // relabel canonically by first appearance
    std::vector<std::int32_t> fresh(_label.size(), -1);
    std::int32_t              next = 0;
    for (auto& l : _label) {
      if (l < 0) {
        l = -1;
        continue;
      }
      auto& f = fresh[static_cast<std::size_t>(l)];
      if (f < 0) {
        f = next++;
      }
      l = f;
    }
    _classes = static_cast<std::size_t>(next);
  }

  EqRel EqRel::identity(std::size_t ground) {
    std::vector<std::int32_t> labels(ground);
    std::iota(labels.begin(), labels.end(), 0);
    return EqRel(std::move(labels));
  }

  EqRel EqRel::identity_on(std::size_t ground, std::vector<bool> const& carrier) {
    if (carrier.size() != ground) {
      throw std::invalid_argument("carrier size does not match ground set");
    }
    std::vector<std::int32_t> labels(ground, -1);
    for (std::size_t x = 0; x < ground; ++x) {
      if (carrier[x]) {
        labels[x] = static_cast<std::int32_t>(x);
      }
    }
    return EqRel(std::move(labels));
  }

  EqRel EqRel::universal(std::size_t ground) {
    return EqRel(std::vector<std::int32_t>(ground, 0));
  }

  EqRel EqRel::from_labels(std::vector<std::int32_t> const& labels) {
    // labels may be arbitrary integers; compress them first
    std::vector<std::int32_t>                      out(labels.size(), -1);
    std::unordered_map<std::int32_t, std::int32_t> seen;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      if (labels[x] < 0) {
        continue;
      }
      auto [it, inserted] = seen.emplace(labels[x], static_cast<std::int32_t>(seen.size()));
      out[x]              = it->second;
    }
    return EqRel(std::move(out));
  }

  EqRel EqRel::from_blocks(std::size_t ground, std::vector<Block> const& blocks) {
    std::vector<std::int32_t> labels(ground, -1);
    std::int32_t              next = 0;
    for (auto const& b : blocks) {
      for (auto x : b) {
        if (x >= ground || labels[x] >= 0) {
          throw std::invalid_argument("blocks are not disjoint subsets of the ground set");
        }
        labels[x] = next;
      }
      ++next;
    }
    return EqRel(std::move(labels));
  }

  std::vector<bool> EqRel::carrier() const {
    std::vector<bool> out(_label.size());
    for (std::size_t x = 0; x < _label.size(); ++x) {
      out[x] = _label[x] >= 0;
    }
    return out;
  }

  bool EqRel::related(std::size_t x, std::size_t y) const {
    return _label[x] >= 0 && _label[x] == _label[y];
  }

  std::vector<Block> EqRel::classes() const {
    // canonical labels are ordered by minimum element already
    std::vector<Block> out(_classes);
    for (std::size_t x = 0; x < _label.size(); ++x) {
      if (_label[x] >= 0) {
        out[static_cast<std::size_t>(_label[x])].push_back(x);
      }
    }
    return out;
  }

  bool EqRel::subset_of(EqRel const& other) const {
    if (other.ground() != ground()) {
      return false;
    }
    // each class of *this must sit inside a single class of other
    std::vector<std::int32_t> image(_classes, -1);
    for (std::size_t x = 0; x < _label.size(); ++x) {
      if (_label[x] < 0) {
        continue;
      }
      if (other._label[x] < 0) {
        return false;
      }
      auto& im = image[static_cast<std::size_t>(_label[x])];
      if (im < 0) {
        im = other._label[x];
      } else if (im != other._label[x]) {
        return false;
      }
    }
    return true;
  }

  EqRel EqRel::restrict_to(std::vector<bool> const& subset) const {
    if (subset.size() != ground()) {
      throw std::invalid_argument("subset size does not match ground set");
    }
    std::vector<std::int32_t> labels = _label;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      if (!subset[x]) {
        labels[x] = -1;
      }
    }
    return EqRel(std::move(labels));
  }

  EqRel join(EqRel const& r, EqRel const& s) {
    if (r.ground() != s.ground()) {
      throw std::invalid_argument("join of relations on different ground sets");
    }
    std::size_t const n = r.ground();
    UnionFind         uf(n);
    std::vector<std::int32_t> first_r(r.number_of_classes(), -1);
    std::vector<std::int32_t> first_s(s.number_of_classes(), -1);
    auto merge = [&uf](std::vector<std::int32_t>& first, std::int32_t label, std::size_t x) {
      if (label < 0) {
        return;
      }
      auto& f = first[static_cast<std::size_t>(label)];
      if (f < 0) {
        f = static_cast<std::int32_t>(x);
      } else {
        uf.unite(static_cast<std::size_t>(f), x);
      }
    };
    for (std::size_t x = 0; x < n; ++x) {
      merge(first_r, r.label(x), x);
      merge(first_s, s.label(x), x);
    }
    std::vector<std::int32_t> labels(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      if (r.in_carrier(x) || s.in_carrier(x)) {
        labels[x] = static_cast<std::int32_t>(uf.find(x));
      }
    }
    return EqRel::from_labels(labels);
  }

}  // namespace semicoh
