#include "semicoh/partial_map.hpp"

#include <stdexcept>  // for invalid_argument
#include <utility>    // for move

namespace semicoh {

  char const* kind_name(Kind k) noexcept {
    switch (k) {
      case Kind::T:
        return "T";
      case Kind::PT:
        return "PT";
      case Kind::I:
        return "I";
      case Kind::P:
        return "P";
    }
    return "?";
  }

  PartialMap::PartialMap(std::vector<std::int32_t> images) : _images(std::move(images)) {
    auto const n = static_cast<std::int32_t>(_images.size());
    for (auto x : _images) {
      if (x != UNDEFINED && (x < 0 || x >= n)) {
        throw std::invalid_argument("image outside the ground set");
      }
    }
  }

  PartialMap PartialMap::identity(std::size_t n) {
    std::vector<std::int32_t> im(n);
    for (std::size_t x = 0; x < n; ++x) {
      im[x] = static_cast<std::int32_t>(x);
    }
    return PartialMap(std::move(im));
  }

  PartialMap PartialMap::empty(std::size_t n) {
    return PartialMap(std::vector<std::int32_t>(n, UNDEFINED));
  }

  PartialMap PartialMap::partial_identity(std::vector<bool> const& domain) {
    std::vector<std::int32_t> im(domain.size(), UNDEFINED);
    for (std::size_t x = 0; x < domain.size(); ++x) {
      if (domain[x]) {
        im[x] = static_cast<std::int32_t>(x);
      }
    }
    return PartialMap(std::move(im));
  }

  bool PartialMap::is_total() const noexcept {
    for (auto x : _images) {
      if (x == UNDEFINED) {
        return false;
      }
    }
    return true;
  }

  bool PartialMap::is_injective() const noexcept {
    std::vector<bool> hit(_images.size(), false);
    for (auto x : _images) {
      if (x == UNDEFINED) {
        continue;
      }
      if (hit[static_cast<std::size_t>(x)]) {
        return false;
      }
      hit[static_cast<std::size_t>(x)] = true;
    }
    return true;
  }

  bool PartialMap::is_of_kind(Kind k) const noexcept {
    switch (k) {
      case Kind::T:
        return is_total();
      case Kind::PT:
        return true;
      case Kind::I:
        return is_injective();
      case Kind::P:
        return false;
    }
    return false;
  }

  PartialMap PartialMap::inverse() const {
    if (!is_injective()) {
      throw std::invalid_argument("inverse of a non-injective partial map");
    }
    std::vector<std::int32_t> im(_images.size(), UNDEFINED);
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != UNDEFINED) {
        im[static_cast<std::size_t>(_images[x])] = static_cast<std::int32_t>(x);
      }
    }
    return PartialMap(std::move(im));
  }

  PartialMap compose(PartialMap const& a, PartialMap const& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("composition of partial maps of different degrees");
    }
    std::vector<std::int32_t> im(a.degree(), PartialMap::UNDEFINED);
    for (std::size_t x = 0; x < a.degree(); ++x) {
      if (a.defined(x)) {
        im[x] = b[static_cast<std::size_t>(a[x])];
      }
    }
    return PartialMap(std::move(im));
  }

  MapProfile profile(PartialMap const& a) {
    std::size_t const         n = a.degree();
    MapProfile                out;
    std::vector<std::int32_t> ker(n, -1);
    std::vector<std::int32_t> kerhat(n, -1);
    out.dom.assign(n, false);
    out.im.assign(n, false);
    auto const undefined_class = static_cast<std::int32_t>(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (a.defined(x)) {
        out.dom[x]                              = true;
        out.im[static_cast<std::size_t>(a[x])] = true;
        ker[x] = kerhat[x] = a[x];
      } else {
        kerhat[x] = undefined_class;
      }
    }
    out.ker    = EqRel::from_labels(ker);
    out.kerhat = EqRel::from_labels(kerhat);
    return out;
  }

  PartialMap embed_i_to_pt(PartialMap const& a) {
    if (!a.is_injective()) {
      throw std::invalid_argument("I -> PT embedding applied to a non-injective map");
    }
    return a;
  }

  PartialMap embed_pt_to_t(PartialMap const& a) {
    std::size_t const         n    = a.degree();
    auto const                sink = static_cast<std::int32_t>(n);
    std::vector<std::int32_t> im(n + 1, sink);
    for (std::size_t x = 0; x < n; ++x) {
      if (a.defined(x)) {
        im[x] = a[x];
      }
    }
    return PartialMap(std::move(im));
  }

}  // namespace semicoh
