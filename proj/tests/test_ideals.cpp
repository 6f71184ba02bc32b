#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "semicoh/ideals.hpp"
#include "semicoh/monoids.hpp"

using namespace semicoh;
using test::pm;
using test::pt;

namespace {

  template <typename E, typename Meet>
  void all_pairs(FiniteMonoid<E> const& S, Side side, Meet&& meet) {
    for (auto const& a : S.elements()) {
      for (auto const& b : S.elements()) {
        auto const r = meet(a, b);
        CHECK((r.empty() || S.contains(*r.generator)));
        CHECK(verify_meet(S, a, b, r, side));
      }
    }
  }

  template <Kind K>
  void maps_both_sides(std::size_t n) {
    auto const S = map_monoid(K, n);
    all_pairs(S, Side::right, meet_right_pt);
    all_pairs(S, Side::left, [](auto const& a, auto const& b) { return meet_left(K, a, b); });
  }

}  // namespace

TEST_CASE("right meets of partial maps") {
  CHECK(meet_right_pt(pm("[1,2]"), pm("[1,_]")).generator == pm("[1,_]"));
  CHECK(meet_right_pt(pm("[1,_]"), pm("[_,2]")).generator == PartialMap::empty(2));
  CHECK(meet_right_pt(pm("[2,2,1]"), pm("[1,3,3]")).generator == pm("[1,1,1]"));

  auto const PT3 = map_monoid(Kind::PT, 3);
  for (std::size_t a = 0; a < PT3.size(); ++a) {
    auto const r = meet_right_pt(PT3.at(a), PT3.at(a));
    CHECK(PT3.right_ideal(PT3.index(*r.generator)) == PT3.right_ideal(a));
  }
}

TEST_CASE("left meets of partial maps") {
  CHECK(meet_left(Kind::T, pm("[1,1]"), pm("[2,2]")).empty());
  CHECK(meet_left(Kind::I, pm("[1,2,3]"), pm("[1,2,3]")).generator == pm("[1,2,3]"));
  CHECK(meet_left(Kind::PT, pm("[1,1]"), pm("[1,_]")).generator == pm("[1,_]"));
  CHECK(meet_left(Kind::T, pm("[2,3,3]"), pm("[3,3,1]")).generator == pm("[3,3,3]"));
  CHECK(meet_left(Kind::PT, pm("[1,1]"), pm("[2,_]")).generator == PartialMap::empty(2));
}

TEST_CASE("meets over full monoids of degree at most 3") {
  maps_both_sides<Kind::PT>(2);
  maps_both_sides<Kind::PT>(3);
  maps_both_sides<Kind::T>(2);
  maps_both_sides<Kind::T>(3);
  maps_both_sides<Kind::I>(2);
  maps_both_sides<Kind::I>(3);
}

TEST_CASE("meets of partitions") {
  CHECK(meet_right_partition(pt("{1 2}{1'}{2'}"), pt("{1}{2 2'}{1'}")).empty());
  CHECK(meet_right_partition(Partition::identity(2), Partition::identity(2)).generator
        == Partition::identity(2));
  CHECK(meet_right_partition(pt("{1 2 1'}{2'}"), Partition::identity(2)).generator
        == pt("{1 2 1'}{2'}"));
  CHECK(meet_left_partition(star(pt("{1 2}{1'}{2'}")), star(pt("{1}{2 2'}{1'}"))).empty());
  CHECK(meet_left_partition(pt("{1 2 1'}{2'}"), pt("{1 2 1'}{2'}")).generator.has_value());

  auto const P2 = partition_monoid(2);
  all_pairs(P2, Side::right, meet_right_partition);
  all_pairs(P2, Side::left, meet_left_partition);

  for (auto const& a : P2.elements()) {
    for (auto const& b : P2.elements()) {
      auto const l = meet_left_partition(a, b);
      auto const r = meet_right_partition(star(a), star(b));
      REQUIRE(l.empty() == r.empty());
      if (!l.empty()) CHECK(*l.generator == star(*r.generator));
    }
  }
}

TEST_CASE("partition emptiness is exact on P_2") {
  auto const P2 = partition_monoid(2);
  for (std::size_t a = 0; a < P2.size(); ++a) {
    for (std::size_t b = 0; b < P2.size(); ++b) {
      auto const ia = P2.right_ideal(a), ib = P2.right_ideal(b);
      bool       meet = false;
      for (auto x : ia) meet = meet || std::binary_search(ib.begin(), ib.end(), x);
      CHECK(meet_right_partition(P2.at(a), P2.at(b)).empty() == !meet);
    }
  }
}

TEST_CASE("meets on sampled pairs of P_3") {
  auto const      P3 = partition_monoid(3);
  std::mt19937_64 rng(17);
  auto const      last = static_cast<std::int64_t>(P3.size()) - 1;
  for (int i = 0; i < 500; ++i) {
    auto const& a = P3.at(static_cast<std::size_t>(test::uniform(rng, 0, last)));
    auto const& b = P3.at(static_cast<std::size_t>(test::uniform(rng, 0, last)));
    CHECK(verify_meet(P3, a, b, meet_right_partition(a, b), Side::right));
    CHECK(verify_meet(P3, a, b, meet_left_partition(a, b), Side::left));
  }
}

TEST_CASE("right meets in I_3 are principal on an idempotent") {
  auto const I3 = map_monoid(Kind::I, 3);
  for (auto const& a : I3.elements()) {
    for (auto const& b : I3.elements()) {
      auto const r = meet_right_pt(a, b);
      REQUIRE_FALSE(r.empty());
      auto const e = *r.generator;
      CHECK(e.is_of_kind(Kind::I));
      CHECK(I3.right_ideal(I3.index(e)) == I3.right_ideal(I3.index(e * e.inverse())));
    }
  }
}

TEST_CASE("verify_meet rejects wrong answers") {
  auto const PT2 = map_monoid(Kind::PT, 2);
  auto const a = pm("[1,_]"), b = pm("[_,2]");
  CHECK_FALSE(verify_meet(PT2, a, b, MeetResult<PartialMap>{a}, Side::right));
  CHECK_FALSE(verify_meet(PT2, a, b, MeetResult<PartialMap>{}, Side::right));
  CHECK(verify_meet(PT2, a, a, MeetResult<PartialMap>{a}, Side::right));
}
