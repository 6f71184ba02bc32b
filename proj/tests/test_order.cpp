#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "semicoh/monoids.hpp"
#include "semicoh/order.hpp"

using namespace semicoh;
using test::pm;
using test::pt;

namespace {

  template <typename E, typename R, typename L>
  void agree_with_oracle(FiniteMonoid<E> const& S, R&& leq_r, L&& leq_l) {
    for (std::size_t a = 0; a < S.size(); ++a) {
      for (std::size_t b = 0; b < S.size(); ++b) {
        CHECK(leq_r(S.at(a), S.at(b)) == leq_oracle(S, a, b, Side::right).holds);
        CHECK(leq_l(S.at(a), S.at(b)) == leq_oracle(S, a, b, Side::left).holds);
      }
    }
  }

  template <Kind K>
  void agree_maps(std::size_t n) {
    agree_with_oracle(
        map_monoid(K, n), [](auto const& a, auto const& b) { return leq_R(K, a, b); },
        [](auto const& a, auto const& b) { return leq_L(K, a, b); });
  }

}  // namespace

TEST_CASE("right preorder examples") {
  CHECK(leq_R(Kind::PT, pm("[1,_]"), pm("[1,2]")));
  CHECK_FALSE(leq_R(Kind::PT, pm("[1,2]"), pm("[1,_]")));
  CHECK(leq_R(Kind::T, pm("[2,1,3]"), pm("[2,1,3]")));
  CHECK(leq_R(pt("{1}{2}{1'}{2'}"), Partition::identity(2)));
  CHECK_FALSE(leq_R(Partition::identity(2), pt("{1}{2}{1'}{2'}")));
  CHECK_THROWS_AS(leq_R(Kind::T, pm("[1,_]"), pm("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(leq_R(Kind::I, pm("[1,1]"), pm("[1,2]")), std::invalid_argument);
}

TEST_CASE("left preorder examples") {
  CHECK(leq_L(Kind::T, pm("[1,1]"), pm("[1,2]")));
  CHECK_FALSE(leq_L(Kind::T, pm("[1,2]"), pm("[1,1]")));
  CHECK(leq_L(Kind::PT, pm("[_,2]"), pm("[_,2]")));
  CHECK(leq_L(pt("{1}{2}{1'}{2'}"), Partition::identity(2)));
}

TEST_CASE("oracle witnesses follow element order") {
  auto const T2 = map_monoid(Kind::T, 2);
  auto const v  = leq_oracle(T2, pm("[2,2]"), pm("[1,1]"), Side::right);
  REQUIRE(v.holds);
  CHECK(T2.at(*v.witness) == pm("[2,1]"));

  for (std::size_t a = 0; a < T2.size(); ++a) {
    auto const self = leq_oracle(T2, a, a, Side::right);
    CHECK(self.holds);
    CHECK(self.witness == 0u);
  }
  CHECK_FALSE(leq_oracle(T2, pm("[1,2]"), pm("[1,1]"), Side::right).holds);
}

TEST_CASE("characterisation agrees with the oracle") {
  agree_maps<Kind::PT>(2);
  agree_maps<Kind::PT>(3);
  agree_maps<Kind::T>(3);
  agree_maps<Kind::I>(3);
  agree_with_oracle(
      partition_monoid(2), [](auto const& a, auto const& b) { return leq_R(a, b); },
      [](auto const& a, auto const& b) { return leq_L(a, b); });
}

TEST_CASE("characterisation agrees with the oracle on sampled P_3 pairs") {
  auto const      P3 = partition_monoid(3);
  std::mt19937_64 rng(5);
  auto const      last = static_cast<std::int64_t>(P3.size()) - 1;
  for (int i = 0; i < 2000; ++i) {
    auto const a = static_cast<std::size_t>(test::uniform(rng, 0, last));
    auto const b = static_cast<std::size_t>(test::uniform(rng, 0, last));
    CHECK(leq_R(P3.at(a), P3.at(b)) == leq_oracle(P3, a, b, Side::right).holds);
    CHECK(leq_L(P3.at(a), P3.at(b)) == leq_oracle(P3, a, b, Side::left).holds);
  }
}

TEST_CASE("kerhat containment is class refinement") {
  auto const PT3 = enumerate_maps(Kind::PT, 3);
  for (auto const& a : PT3) {
    for (auto const& b : PT3) {
      auto const ka = profile(a).kerhat, kb = profile(b).kerhat;
      // every class of ka is a union of classes of kb
      bool unions = true;
      for (auto const& c : kb.classes()) {
        for (auto x : c) unions = unions && ka.related(x, c.front());
      }
      CHECK(kb.subset_of(ka) == unions);
    }
  }
}

TEST_CASE("natural order") {
  CHECK(natural_leq(pm("[1,_]"), pm("[1,2]")));
  CHECK(natural_leq(pm("[1,_]"), pm("[1,_]")));
  CHECK_FALSE(natural_leq(pm("[1,2]"), pm("[1,_]")));
  CHECK(natural_leq(pt("{1}{2}{1'}{2'}"), pt("{1 1'}{2}{2'}")));
  CHECK_THROWS_AS(natural_leq(pm("[2,1]"), pm("[1,2]")), std::invalid_argument);
}

TEST_CASE("idempotent order implies the Green preorders") {
  auto const PT3 = map_monoid(Kind::PT, 3);
  for (auto e : PT3.idempotents()) {
    for (auto f : PT3.idempotents()) {
      if (natural_leq(PT3.at(e), PT3.at(f))) {
        CHECK(leq_R(Kind::PT, PT3.at(e), PT3.at(f)));
        CHECK(leq_L(Kind::PT, PT3.at(e), PT3.at(f)));
      }
    }
  }
  auto const P2 = partition_monoid(2);
  for (auto e : P2.idempotents()) {
    for (auto f : P2.idempotents()) {
      if (natural_leq(P2.at(e), P2.at(f))) {
        CHECK(leq_R(P2.at(e), P2.at(f)));
        CHECK(leq_L(P2.at(e), P2.at(f)));
      }
    }
  }
}

TEST_CASE("inverse monoid law on I_3") {
  auto const I3 = enumerate_maps(Kind::I, 3);
  for (auto const& a : I3) {
    for (auto const& b : I3) {
      CHECK(leq_R(Kind::I, a, b) == natural_leq(a * a.inverse(), b * b.inverse()));
    }
  }
}

TEST_CASE("right preorder is reflexive and transitive") {
  auto const T3 = enumerate_maps(Kind::T, 3);
  for (auto const& a : T3) {
    CHECK(leq_R(Kind::T, a, a));
    for (auto const& b : T3) {
      for (auto const& c : T3) {
        if (leq_R(Kind::T, a, b) && leq_R(Kind::T, b, c)) {
          CHECK(leq_R(Kind::T, a, c));
        }
      }
    }
  }
  auto const P2 = enumerate_partitions(2);
  for (auto const& a : P2) {
    CHECK(leq_R(a, a));
    for (auto const& b : P2) {
      for (auto const& c : P2) {
        if (leq_R(a, b) && leq_R(b, c)) {
          CHECK(leq_R(a, c));
        }
      }
    }
  }
}

TEST_CASE("generalised inverses") {
  auto const T2 = map_monoid(Kind::T, 2);
  for (auto e : T2.idempotents()) {
    auto const inv = generalised_inverses(T2, e);
    CHECK(std::find(inv.begin(), inv.end(), e) != inv.end());
  }
  auto const swap = T2.index(pm("[2,1]"));
  auto const inv  = generalised_inverses(T2, swap);
  CHECK(inv == std::vector<std::size_t>{swap});

  auto const I2   = map_monoid(Kind::I, 2);
  auto const a    = I2.index(pm("[2,_]"));
  auto const invs = generalised_inverses(I2, a);
  CHECK(invs == std::vector<std::size_t>{I2.index(pm("[_,1]"))});
}
