#include "semicoh/order.hpp"

#include <algorithm>  // for find

namespace semicoh {

  namespace {
    void check_kind(Kind kind, PartialMap const& a, PartialMap const& b) {
      if (kind == Kind::P) {
        throw std::invalid_argument("partial maps compared as partitions");
      }
      if (a.degree() != b.degree()) {
        throw std::invalid_argument("elements of different degrees");
      }
      if (!a.is_of_kind(kind) || !b.is_of_kind(kind)) {
        throw std::invalid_argument(std::string("element is not in ") + kind_name(kind));
      }
    }

    bool subset(std::vector<bool> const& x, std::vector<bool> const& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] && !y[i]) {
          return false;
        }
      }
      return true;
    }

    bool blocks_subset(std::vector<Block> const& x, std::vector<Block> const& y) {
      for (auto const& b : x) {
        if (std::find(y.begin(), y.end(), b) == y.end()) {
          return false;
        }
      }
      return true;
    }

    void check_degree(Partition const& a, Partition const& b) {
      if (a.degree() != b.degree()) {
        throw std::invalid_argument("elements of different degrees");
      }
    }
  }  // namespace

  bool leq_R(Kind kind, PartialMap const& a, PartialMap const& b) {
    check_kind(kind, a, b);
    auto const pa = profile(a);
    auto const pb = profile(b);
    return subset(pa.dom, pb.dom) && pb.kerhat.subset_of(pa.kerhat);
  }

  bool leq_L(Kind kind, PartialMap const& a, PartialMap const& b) {
    check_kind(kind, a, b);
    return subset(profile(a).im, profile(b).im);
  }

  bool leq_R(Partition const& a, Partition const& b) {
    check_degree(a, b);
    auto const pa = profile(a);
    auto const pb = profile(b);
    return pb.ker.subset_of(pa.ker) && blocks_subset(pb.upper, pa.upper);
  }

  bool leq_L(Partition const& a, Partition const& b) {
    check_degree(a, b);
    auto const pa = profile(a);
    auto const pb = profile(b);
    return pb.coker.subset_of(pa.coker) && blocks_subset(pb.lower, pa.lower);
  }

}  // namespace semicoh
