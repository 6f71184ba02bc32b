// A finite monoid given by an explicit, indexed element list.

#ifndef SEMICOH_FINITE_MONOID_HPP_
#define SEMICOH_FINITE_MONOID_HPP_

#include <algorithm>      // for find, rotate
#include <concepts>       // for convertible_to
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, uint64_t
#include <deque>          // for deque
#include <functional>     // for hash
#include <stdexcept>      // for invalid_argument
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>         // for vector

#include "enumerate.hpp"  // for CapExceeded, DEFAULT_ENUMERATION_CAP

namespace semicoh {

  //! Element types stored in a FiniteMonoid: a value type with a product,
  //! equality, a hash, a degree, and an identity of each degree.
  template <typename E>
  concept MonoidElement = requires(E const& a, std::size_t n) {
    { a* a } -> std::convertible_to<E>;
    { a == a } -> std::convertible_to<bool>;
    { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
    { a.degree() } -> std::convertible_to<std::size_t>;
    { E::identity(n) } -> std::convertible_to<E>;
  };

  //! Elements are indexed; index 0 is always the identity. The Cayley table
  //! is tabulated when the monoid has at most TABLE_LIMIT elements and is
  //! computed on demand otherwise.
  //!
  //! An opposite monoid shares the element list and multiplies in reverse,
  //! so that left-sided notions can reuse right-sided algorithms.
  template <MonoidElement E>
  class FiniteMonoid {
   public:
    using element_type = E;
    using index_type   = std::size_t;

    static constexpr std::size_t TABLE_LIMIT = 1024;

    //! All elements of a monoid; every non-identity element is a generator.
    //! Throws std::invalid_argument if the list is not closed under products
    //! or lacks the identity.
    static FiniteMonoid from_elements(std::size_t n, std::vector<E> elements);

    //! The submonoid generated by `gens`, by breadth-first closure of the
    //! right Cayley graph from the identity.
    static FiniteMonoid close(std::size_t n, std::vector<E> const& gens,
                              std::uint64_t cap = DEFAULT_ENUMERATION_CAP);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    E const& at(index_type i) const {
      return _elements.at(i);
    }
    std::vector<E> const& elements() const noexcept {
      return _elements;
    }
    std::vector<index_type> const& generators() const noexcept {
      return _gens;
    }
    bool is_opposite() const noexcept {
      return _opposite;
    }

    bool contains(E const& x) const {
      return _index.find(x) != _index.end();
    }
    //! Throws std::out_of_range if `x` is not an element.
    index_type index(E const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        throw std::out_of_range("element is not in the monoid");
      }
      return it->second;
    }

    //! The product i * j in this monoid (reversed for an opposite monoid).
    index_type product(index_type i, index_type j) const {
      if (_opposite) {
        std::swap(i, j);
      }
      if (!_table.empty()) {
        return _table[i * size() + j];
      }
      return index(_elements[i] * _elements[j]);
    }

    //! Same elements, products reversed.
    FiniteMonoid opposite() const {
      FiniteMonoid out = *this;
      out._opposite    = !_opposite;
      return out;
    }

    std::vector<index_type> idempotents() const {
      std::vector<index_type> out;
      for (index_type i = 0; i < size(); ++i) {
        if (product(i, i) == i) {
          out.push_back(i);
        }
      }
      return out;
    }

    //! The principal right ideal aS as a sorted index list.
    std::vector<index_type> right_ideal(index_type a) const {
      std::vector<bool> hit(size(), false);
      for (index_type s = 0; s < size(); ++s) {
        hit[product(a, s)] = true;
      }
      return collect(hit);
    }

    //! The principal left ideal Sa as a sorted index list.
    std::vector<index_type> left_ideal(index_type a) const {
      std::vector<bool> hit(size(), false);
      for (index_type s = 0; s < size(); ++s) {
        hit[product(s, a)] = true;
      }
      return collect(hit);
    }

   private:
    FiniteMonoid() = default;

    static std::vector<index_type> collect(std::vector<bool> const& hit) {
      std::vector<index_type> out;
      for (index_type i = 0; i < hit.size(); ++i) {
        if (hit[i]) {
          out.push_back(i);
        }
      }
      return out;
    }

    void build_index() {
      _index.clear();
      _index.reserve(_elements.size());
      for (index_type i = 0; i < _elements.size(); ++i) {
        if (!_index.emplace(_elements[i], i).second) {
          throw std::invalid_argument("duplicate element in monoid element list");
        }
      }
    }

    void build_table() {
      _table.clear();
      if (size() > TABLE_LIMIT) {
        return;
      }
      _table.resize(size() * size());
      for (index_type i = 0; i < size(); ++i) {
        for (index_type j = 0; j < size(); ++j) {
          auto it = _index.find(_elements[i] * _elements[j]);
          if (it == _index.end()) {
            throw std::invalid_argument("element list is not closed under products");
          }
          _table[i * size() + j] = static_cast<std::uint32_t>(it->second);
        }
      }
    }

    std::size_t                          _degree = 0;
    std::vector<E>                       _elements;
    std::unordered_map<E, index_type>    _index;
    std::vector<index_type>              _gens;
    std::vector<std::uint32_t>           _table;
    bool                                 _opposite = false;
  };

  template <MonoidElement E>
  FiniteMonoid<E> FiniteMonoid<E>::from_elements(std::size_t n, std::vector<E> elements) {
    E const id = E::identity(n);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == id) {
        // keep enumeration order, identity first
        auto it = elements.begin() + static_cast<std::ptrdiff_t>(i);
        std::rotate(elements.begin(), it, it + 1);
        FiniteMonoid out;
        out._degree   = n;
        out._elements = std::move(elements);
        out.build_index();
        for (index_type j = 1; j < out.size(); ++j) {
          out._gens.push_back(j);
        }
        out.build_table();
        if (out._table.empty()) {
          // large monoid: closure is checked on generator products only
          for (index_type a = 0; a < out.size(); ++a) {
            for (auto s : out._gens) {
              if (!out.contains(out._elements[a] * out._elements[s])) {
                throw std::invalid_argument("element list is not closed under products");
              }
            }
          }
        }
        return out;
      }
    }
    throw std::invalid_argument("element list does not contain the identity");
  }

  template <MonoidElement E>
  FiniteMonoid<E> FiniteMonoid<E>::close(std::size_t n, std::vector<E> const& gens,
                                         std::uint64_t cap) {
    FiniteMonoid out;
    out._degree = n;
    out._elements.push_back(E::identity(n));
    out._index.emplace(out._elements.back(), 0);
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw std::invalid_argument("generator of the wrong degree");
      }
    }
    std::deque<index_type> queue{0};
    while (!queue.empty()) {
      index_type const a = queue.front();
      queue.pop_front();
      for (auto const& g : gens) {
        E x = out._elements[a] * g;
        if (out._index.find(x) == out._index.end()) {
          if (out._elements.size() >= cap) {
            throw CapExceeded("monoid closure exceeds the cap of " + std::to_string(cap)
                              + " elements");
          }
          out._index.emplace(x, out._elements.size());
          queue.push_back(out._elements.size());
          out._elements.push_back(std::move(x));
        }
      }
    }
    for (auto const& g : gens) {
      auto const i = out.index(g);
      if (std::find(out._gens.begin(), out._gens.end(), i) == out._gens.end()) {
        out._gens.push_back(i);
      }
    }
    out.build_table();
    return out;
  }

}  // namespace semicoh

#endif  // SEMICOH_FINITE_MONOID_HPP_
