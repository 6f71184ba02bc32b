// Partial self-maps of {0, ..., n-1} composed left to right: x(ab) = (xa)b.
//
// Points are 0-based in memory; the text forms in io.hpp are 1-based.

#ifndef SEMICOH_PARTIAL_MAP_HPP_
#define SEMICOH_PARTIAL_MAP_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for int32_t
#include <functional>  // for hash
#include <vector>      // for vector

#include "eqrel.hpp"  // for EqRel

namespace semicoh {

  //! Which monoid an element is drawn from.
  enum class Kind { T, PT, I, P };

  char const* kind_name(Kind k) noexcept;

  class PartialMap {
   public:
    static constexpr std::int32_t UNDEFINED = -1;

    PartialMap() = default;
    //! Throws std::invalid_argument if an image lies outside the ground set.
    explicit PartialMap(std::vector<std::int32_t> images);

    static PartialMap identity(std::size_t n);
    static PartialMap empty(std::size_t n);
    //! Identity restricted to the points marked in `domain`.
    static PartialMap partial_identity(std::vector<bool> const& domain);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    bool defined(std::size_t x) const {
      return _images[x] != UNDEFINED;
    }
    std::int32_t operator[](std::size_t x) const {
      return _images[x];
    }
    std::vector<std::int32_t> const& images() const noexcept {
      return _images;
    }

    bool is_total() const noexcept;
    bool is_injective() const noexcept;
    //! True iff the map is an element of the monoid of the given kind (P is
    //! never satisfied).
    bool is_of_kind(Kind k) const noexcept;

    //! The inverse partial bijection. Throws if not injective.
    PartialMap inverse() const;

    bool operator==(PartialMap const&) const = default;
    auto operator<=>(PartialMap const&) const = default;

   private:
    std::vector<std::int32_t> _images;
  };

  //! Left-to-right composition. Throws std::invalid_argument on a degree
  //! mismatch.
  PartialMap compose(PartialMap const& a, PartialMap const& b);

  inline PartialMap operator*(PartialMap const& a, PartialMap const& b) {
    return compose(a, b);
  }

  struct MapProfile {
    std::vector<bool> dom;
    std::vector<bool> im;
    //! Fibres of the map over its domain.
    EqRel ker;
    //! ker together with one extra class holding all undefined points.
    EqRel kerhat;
  };

  MapProfile profile(PartialMap const& a);

  //! Inclusion of partial bijections in the partial transformation monoid.
  PartialMap embed_i_to_pt(PartialMap const& a);
  //! Partial map on n points to a total map on n + 1 points sending every
  //! undefined point, and the new point, to the new point.
  PartialMap embed_pt_to_t(PartialMap const& a);

}  // namespace semicoh

template <>
struct std::hash<semicoh::PartialMap> {
  std::size_t operator()(semicoh::PartialMap const& a) const noexcept {
    std::size_t h = a.degree();
    for (auto x : a.images()) {
      h = h * 31 + static_cast<std::size_t>(x + 1);
    }
    return h;
  }
};

#endif  // SEMICOH_PARTIAL_MAP_HPP_
