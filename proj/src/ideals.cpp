#include "semicoh/ideals.hpp"

#include <stdexcept>  // for invalid_argument

namespace semicoh {

  namespace {
    void check_degree(std::size_t m, std::size_t n) {
      if (m != n) {
        throw std::invalid_argument("elements of different degrees");
      }
    }

    // sends each class of rel to its minimum; undefined off the carrier
    PartialMap collapse_to_minima(EqRel const& rel) {
      std::vector<std::int32_t> im(rel.ground(), PartialMap::UNDEFINED);
      for (auto const& c : rel.classes()) {
        for (auto x : c) {
          im[x] = static_cast<std::int32_t>(c.front());
        }
      }
      return PartialMap(std::move(im));
    }
  }  // namespace

  MeetResult<PartialMap> meet_right_pt(PartialMap const& a, PartialMap const& b) {
    check_degree(a.degree(), b.degree());
    auto const        pa = profile(a);
    auto const        pb = profile(b);
    auto const        j  = join(pa.ker, pb.ker);
    std::vector<bool> Y(a.degree(), false);
    for (auto const& c : j.classes()) {
      bool inside = true;
      for (auto x : c) {
        inside = inside && pa.dom[x] && pb.dom[x];
      }
      for (auto x : c) {
        Y[x] = inside;
      }
    }
    return {collapse_to_minima(j.restrict_to(Y))};
  }

  MeetResult<PartialMap> meet_left(Kind kind, PartialMap const& a, PartialMap const& b) {
    check_degree(a.degree(), b.degree());
    if (kind == Kind::P) {
      throw std::invalid_argument("meet_left on partial maps called with kind P");
    }
    auto const        ia = profile(a).im;
    auto const        ib = profile(b).im;
    std::vector<bool> common(a.degree());
    std::int32_t      least = PartialMap::UNDEFINED;
    for (std::size_t x = 0; x < a.degree(); ++x) {
      common[x] = ia[x] && ib[x];
      if (common[x] && least == PartialMap::UNDEFINED) {
        least = static_cast<std::int32_t>(x);
      }
    }
    if (kind != Kind::T) {
      return {PartialMap::partial_identity(common)};
    }
    if (least == PartialMap::UNDEFINED) {
      return {std::nullopt};
    }
    std::vector<std::int32_t> im(a.degree());
    for (std::size_t x = 0; x < a.degree(); ++x) {
      im[x] = common[x] ? static_cast<std::int32_t>(x) : least;
    }
    return {PartialMap(std::move(im))};
  }

  MeetResult<Partition> meet_right_partition(Partition const& a, Partition const& b) {
    check_degree(a.degree(), b.degree());
    std::size_t const n  = a.degree();
    auto const        pa = profile(a);
    auto const        pb = profile(b);

    // upper blocks of a and b must coincide or be disjoint
    constexpr std::size_t    NONE = static_cast<std::size_t>(-1);
    std::vector<Block>       upper = pa.upper;
    std::vector<std::size_t> owner(n, NONE);  // index into upper, for points of Y
    for (std::size_t i = 0; i < upper.size(); ++i) {
      for (auto x : upper[i]) {
        owner[x] = i;
      }
    }
    for (auto const& u : pb.upper) {
      bool const present = std::find(upper.begin(), upper.end(), u) != upper.end();
      if (present) {
        continue;
      }
      for (auto x : u) {
        if (owner[x] != NONE) {
          return {std::nullopt};
        }
      }
      upper.push_back(u);
      for (auto x : u) {
        owner[x] = upper.size() - 1;
      }
    }
    // every kernel class of a or b lies off Y or inside a single upper block
    for (auto const* ker : {&pa.ker, &pb.ker}) {
      for (auto const& c : ker->classes()) {
        for (auto x : c) {
          if (owner[x] != owner[c.front()]) {
            return {std::nullopt};
          }
        }
      }
    }
    std::vector<bool> in_Y(n);
    for (std::size_t x = 0; x < n; ++x) {
      in_Y[x] = owner[x] != NONE;
    }

    std::vector<bool> off_Y(n);
    for (std::size_t x = 0; x < n; ++x) {
      off_Y[x] = !in_Y[x];
    }
    auto const gamma = join(pa.ker, pb.ker).restrict_to(off_Y);

    std::vector<Block> blocks = upper;
    std::vector<bool>  lower_used(n, false);
    for (auto Z : gamma.classes()) {
      auto const z = Z.front();
      Z.push_back(n + z);
      lower_used[z] = true;
      blocks.push_back(std::move(Z));
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!lower_used[x]) {
        blocks.push_back({n + x});
      }
    }
    return {Partition::from_blocks(n, blocks)};
  }

  MeetResult<Partition> meet_left_partition(Partition const& a, Partition const& b) {
    auto r = meet_right_partition(star(a), star(b));
    if (r.generator) {
      r.generator = star(*r.generator);
    }
    return r;
  }

}  // namespace semicoh
