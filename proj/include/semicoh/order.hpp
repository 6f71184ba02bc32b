// Green's preorders, the natural partial order on idempotents, and
// generalised inverses.
//
// The characterisations for partial maps and partitions are checked against
// the defining multiplier search in leq_oracle.

#ifndef SEMICOH_ORDER_HPP_
#define SEMICOH_ORDER_HPP_

#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <vector>     // for vector

#include "finite_monoid.hpp"  // for FiniteMonoid
#include "partial_map.hpp"    // for PartialMap, Kind
#include "partition.hpp"      // for Partition

namespace semicoh {

  enum class Side { right, left };

  //! a <=_R b in the monoid of the given kind (T, PT or I):
  //! dom a is contained in dom b and kerhat b is contained in kerhat a.
  //! Throws std::invalid_argument if an argument is not of that kind.
  bool leq_R(Kind kind, PartialMap const& a, PartialMap const& b);
  //! a <=_L b: im a is contained in im b.
  bool leq_L(Kind kind, PartialMap const& a, PartialMap const& b);

  //! a <=_R b in P_n: ker b is contained in ker a and every upper block of b
  //! is an upper block of a.
  bool leq_R(Partition const& a, Partition const& b);
  //! Dual of leq_R via cokernels and lower blocks.
  bool leq_L(Partition const& a, Partition const& b);

  struct OrderVerdict {
    bool holds = false;
    //! Index of the first multiplier found, in element order.
    std::optional<std::size_t> witness;
  };

  //! Direct search: a <=_R b iff bs = a for some s (sb = a for the left side).
  template <MonoidElement E>
  OrderVerdict leq_oracle(FiniteMonoid<E> const& S, std::size_t a, std::size_t b, Side side) {
    if (a >= S.size() || b >= S.size()) {
      throw std::out_of_range("element index out of range");
    }
    for (std::size_t s = 0; s < S.size(); ++s) {
      auto const p = side == Side::right ? S.product(b, s) : S.product(s, b);
      if (p == a) {
        return {true, s};
      }
    }
    return {false, std::nullopt};
  }

  template <MonoidElement E>
  OrderVerdict leq_oracle(FiniteMonoid<E> const& S, E const& a, E const& b, Side side) {
    return leq_oracle(S, S.index(a), S.index(b), side);
  }

  template <typename E>
  bool is_idempotent(E const& e) {
    return e * e == e;
  }

  //! e <= f iff ef = fe = e. Throws std::invalid_argument unless both are
  //! idempotent.
  template <typename E>
  bool natural_leq(E const& e, E const& f) {
    if (!is_idempotent(e) || !is_idempotent(f)) {
      throw std::invalid_argument("natural order compares idempotents only");
    }
    return e * f == e && f * e == e;
  }

  //! All x with axa = a and xax = x, in element order.
  template <MonoidElement E>
  std::vector<std::size_t> generalised_inverses(FiniteMonoid<E> const& S, std::size_t a) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < S.size(); ++x) {
      auto const ax = S.product(a, x);
      if (S.product(ax, a) == a && S.product(S.product(x, a), x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

}  // namespace semicoh

#endif  // SEMICOH_ORDER_HPP_
