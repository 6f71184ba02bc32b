#include "semicoh/suites.hpp"

#include <chrono>      // for steady_clock
#include <functional>  // for function
#include <random>      // for mt19937_64, uniform_int_distribution
#include <sstream>     // for ostringstream
#include <stdexcept>   // for invalid_argument

#include "semicoh/congruence.hpp"
#include "semicoh/ideals.hpp"
#include "semicoh/monoids.hpp"
#include "semicoh/order.hpp"
#include "semicoh/pmonoid.hpp"

namespace semicoh {

  namespace {

    using Rng = std::mt19937_64;

    std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    }

    NF random_nf(Rng& rng, std::size_t max_excluded, std::int64_t radius) {
      auto const                size = uniform(rng, 0, static_cast<std::int64_t>(max_excluded));
      std::vector<std::int64_t> ex;
      for (std::int64_t i = 0; i < size; ++i) {
        ex.push_back(uniform(rng, -radius, radius));
      }
      return NF(std::move(ex), uniform(rng, -radius, radius));
    }

    // tallies checks and keeps the first failure message
    struct Tally {
      std::size_t checks = 0;
      std::size_t failed = 0;
      std::string first;

      void check(bool ok, std::string const& what) {
        ++checks;
        if (!ok && failed++ == 0) {
          first = what;
        }
      }
      bool ok() const {
        return failed == 0;
      }
      std::string summary(std::string const& extra = "") const {
        std::ostringstream os;
        os << checks << " checks, " << failed << " failed";
        if (!extra.empty()) {
          os << "; " << extra;
        }
        if (failed != 0) {
          os << "; first failure: " << first;
        }
        return os.str();
      }
    };

    CriterionResult presentation(SuiteOptions const& opts) {
      auto const bad = first_failing_relation(presentation_relations(opts.presentation_k));
      return {1, "presentation", !bad.has_value(), 1.0, 0,
              bad ? "relation fails: " + bad->name
                  : "all relations hold for k <= " + std::to_string(opts.presentation_k)};
    }

    CriterionResult nc(SuiteOptions const& opts) {
      auto const r = check_nc_report(opts.nc_n);
      return {2, "nc", r.holds, 1.0, 0,
              r.holds ? "NC1-NC4 hold for indices <= " + std::to_string(opts.nc_n) : r.failure};
    }

    CriterionResult nf_oracle(SuiteOptions const& opts) {
      Rng                rng(opts.seed);
      std::int64_t const N = 100;
      Tally              t;
      for (int i = 0; i < 10'000; ++i) {
        auto const a  = random_nf(rng, 4, 20);
        auto const b  = random_nf(rng, 4, 20);
        auto const wa = nf_window(a, N), wb = nf_window(b, N), wab = nf_window(a * b, N);
        auto const composed = wa * wb;
        auto const interior = N - std::abs(a.shift()) - std::abs(b.shift());
        bool       ok       = true;
        for (auto x = -interior; x <= interior; ++x) {
          auto const i_x = static_cast<std::size_t>(x + N);
          ok             = ok && composed[i_x] == wab[i_x];
        }
        t.check(ok, "window mismatch for pair " + std::to_string(i));
      }
      return {3, "nf-oracle", t.ok(), 5.0, 0, t.summary("window [-100,100]")};
    }

    template <typename E, typename Meet>
    void meets_on(Tally& t, FiniteMonoid<E> const& S, Side side, Meet&& meet,
                  std::size_t& empties) {
      for (auto const& a : S.elements()) {
        for (auto const& b : S.elements()) {
          auto const r = meet(a, b);
          if (r.empty()) {
            ++empties;
          }
          bool const in_S = r.empty() || S.contains(*r.generator);
          t.check(in_S && verify_meet(S, a, b, r, side), "meet of a pair");
        }
      }
    }

    CriterionResult meets(int id, std::string name, Side side) {
      Tally       t;
      std::size_t empties = 0;
      for (auto kind : {Kind::PT, Kind::T, Kind::I}) {
        auto const S = map_monoid(kind, 3);
        if (side == Side::right) {
          meets_on(t, S, side, meet_right_pt, empties);
        } else {
          meets_on(
              t, S, side,
              [kind](PartialMap const& a, PartialMap const& b) { return meet_left(kind, a, b); },
              empties);
        }
      }
      auto const P2 = partition_monoid(2);
      meets_on(t, P2, side, side == Side::right ? meet_right_partition : meet_left_partition,
               empties);
      return {id, std::move(name), t.ok() && (side == Side::right || empties > 0), 60.0, 0,
              t.summary("PT_3, T_3, I_3, P_2; " + std::to_string(empties)
                        + " empty intersections")};
    }

    template <typename E>
    void kappa_on(Tally& t, FiniteMonoid<E> const& S) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        t.check(kappa(S, s) == rc_close(S, {{0, s}}), "kappa differs from <(1,s)>");
      }
    }

    CriterionResult kappa_suite() {
      Tally t;
      kappa_on(t, map_monoid(Kind::T, 3));
      kappa_on(t, map_monoid(Kind::PT, 2));
      return {6, "kappa", t.ok(), 0, 0, t.summary("every s in T_3 and PT_2")};
    }

    template <typename E>
    void idempotent_annihilators(Tally& t, FiniteMonoid<E> const& S) {
      auto const delta = RightCongruence::equality(S.size());
      for (auto e : S.idempotents()) {
        t.check(annihilator(S, delta, e) == rc_close(S, {{0, e}}), "r(e Delta) != <(1,e)>");
      }
    }

    CriterionResult idempotent_annihilator() {
      Tally t;
      idempotent_annihilators(t, map_monoid(Kind::T, 3));
      idempotent_annihilators(t, map_monoid(Kind::PT, 2));
      idempotent_annihilators(t, partition_monoid(2));
      auto const  PT3   = map_monoid(Kind::PT, 3);
      auto const  delta = RightCongruence::equality(PT3.size());
      std::size_t regular = 0;
      for (std::size_t a = 0; a < PT3.size(); ++a) {
        auto const inv = generalised_inverses(PT3, a);
        if (inv.empty()) {
          continue;
        }
        ++regular;
        auto const e = PT3.product(inv.front(), a);
        t.check(annihilator(PT3, delta, a) == annihilator(PT3, delta, e), "r(a Delta) != r(ba Delta)");
      }
      return {7, "idempotent-annihilator", t.ok() && regular == PT3.size(), 0, 0,
              t.summary(std::to_string(regular) + " regular elements of PT_3")};
    }

    template <typename E, typename LeqR, typename LeqL>
    void green_on(Tally& t, FiniteMonoid<E> const& S, LeqR&& leq_r, LeqL&& leq_l) {
      for (std::size_t a = 0; a < S.size(); ++a) {
        for (std::size_t b = 0; b < S.size(); ++b) {
          t.check(leq_r(S.at(a), S.at(b)) == leq_oracle(S, a, b, Side::right).holds,
                  "<=_R disagrees with the oracle");
          t.check(leq_l(S.at(a), S.at(b)) == leq_oracle(S, a, b, Side::left).holds,
                  "<=_L disagrees with the oracle");
        }
      }
    }

    CriterionResult green() {
      Tally t;
      for (auto [kind, n] : {std::pair{Kind::PT, 2}, std::pair{Kind::T, 3}, std::pair{Kind::I, 2}}) {
        green_on(
            t, map_monoid(kind, static_cast<std::size_t>(n)),
            [kind](auto const& a, auto const& b) { return leq_R(kind, a, b); },
            [kind](auto const& a, auto const& b) { return leq_L(kind, a, b); });
      }
      green_on(
          t, partition_monoid(2), [](auto const& a, auto const& b) { return leq_R(a, b); },
          [](auto const& a, auto const& b) { return leq_L(a, b); });
      return {8, "green", t.ok(), 0, 0, t.summary("PT_2, T_3, I_2, P_2")};
    }

    CriterionResult annihilator_witness_suite(SuiteOptions const& opts) {
      Rng   rng(opts.seed + 9);
      Tally t;
      for (int i = 0; i < 1000; ++i) {
        auto        u    = random_nf(rng, 3, 10);
        auto const  n    = uniform(rng, 0, 5);
        bool const  gside = n == 0 || uniform(rng, 0, 1) == 0;
        if (n > 0) {
          auto ex = u.excluded();
          ex.push_back(gside ? n : -n);
          u = NF(std::move(ex), u.shift());
        }
        // ev must equal g^n eu (or h^n eu); v may or may not exclude 0
        auto const target = NF::power_of_g(gside ? n : -n) * NF::e() * u;
        auto       ex     = target.excluded();
        if (uniform(rng, 0, 1) == 0) {
          std::erase(ex, 0);
        }
        NF const   v(std::move(ex), target.shift());
        auto const verdict = in_annihilator(u, v);
        t.check(verdict.member, "constructed pair rejected");
        if (!verdict.member) {
          continue;
        }
        auto const seq = annihilator_witness(u, v);
        auto const Yn  = y_n(static_cast<std::size_t>(std::max<std::int64_t>(verdict.n, 1)));
        t.check(seq.from == u && seq.to == v && seq.steps.size() <= 3 && validate(seq, Yn),
                "witness does not validate");
      }
      std::size_t rejected = 0;
      while (rejected < 1000) {
        auto const u = random_nf(rng, 3, 10);
        auto const v = random_nf(rng, 3, 10);
        if (in_annihilator(u, v).member) {
          continue;
        }
        ++rejected;
        // no n on either side makes the defining equation hold
        auto const eu = NF::e() * u, ev = NF::e() * v;
        bool       none = true;
        for (std::int64_t n = 0; n <= 40; ++n) {
          none = none && NF::power_of_g(n) * eu != ev && NF::power_of_g(-n) * eu != ev;
        }
        t.check(none, "rejected pair satisfies the annihilator equation");
      }
      return {9, "annihilator-witness", t.ok(), 0, 0,
              t.summary("1000 accepted and 1000 rejected pairs")};
    }

    CriterionResult chain() {
      Tally              t;
      std::ostringstream os;
      for (std::size_t n = 2; n <= 5; ++n) {
        auto const bounds = default_chain_bounds(n);
        auto const below  = chain_search(n, bounds);
        auto const at     = chain_search(n, bounds, n);
        t.check(!below.reached, "target reached under Y_{n-1} for n=" + std::to_string(n));
        t.check(at.reached && at.witness && at.witness->steps.size() == 1
                    && validate(*at.witness, y_n(n)),
                "target not reached in one step under Y_n for n=" + std::to_string(n));
        os << " n=" << n << ":" << below.explored << " states";
      }
      return {10, "chain", t.ok(), 30.0, 0, t.summary("bounded certificates;" + os.str())};
    }

    CriterionResult embedding() {
      Tally      t;
      auto const PT2 = enumerate_maps(Kind::PT, 2);
      for (auto const& a : PT2) {
        for (auto const& b : PT2) {
          t.check(embed_pt_to_t(a * b) == embed_pt_to_t(a) * embed_pt_to_t(b),
                  "PT_2 -> T_3 is not multiplicative");
          t.check(a == b || embed_pt_to_t(a) != embed_pt_to_t(b), "PT_2 -> T_3 is not injective");
        }
      }
      auto const I2 = enumerate_maps(Kind::I, 2);
      for (auto const& a : I2) {
        for (auto const& b : I2) {
          t.check(embed_i_to_p(a * b) == embed_i_to_p(a) * embed_i_to_p(b),
                  "I_2 -> P_2 is not multiplicative");
          t.check(a == b || embed_i_to_p(a) != embed_i_to_p(b), "I_2 -> P_2 is not injective");
        }
      }
      return {11, "embedding", t.ok(), 0, 0, t.summary("PT_2 -> T_3 and I_2 -> P_2")};
    }

    void star_laws(Tally& t, Partition const& a, Partition const& b) {
      t.check(star(star(a)) == a, "a** != a");
      t.check(star(a * b) == star(b) * star(a), "(ab)* != b*a*");
      t.check(a * star(a) * a == a, "aa*a != a");
    }

    CriterionResult star_suite(SuiteOptions const& opts) {
      Tally      t;
      auto const P2 = enumerate_partitions(2);
      for (auto const& a : P2) {
        for (auto const& b : P2) {
          star_laws(t, a, b);
        }
      }
      auto const P3 = enumerate_partitions(3);
      Rng        rng(opts.seed + 12);
      auto const last = static_cast<std::int64_t>(P3.size()) - 1;
      for (int i = 0; i < 1000; ++i) {
        star_laws(t, P3[static_cast<std::size_t>(uniform(rng, 0, last))],
                  P3[static_cast<std::size_t>(uniform(rng, 0, last))]);
      }
      return {12, "star", t.ok(), 0, 0, t.summary("all of P_2 and 1000 random P_3 pairs")};
    }

    struct Suite {
      std::string                                           name;
      std::function<CriterionResult(SuiteOptions const&)> run;
    };

    std::vector<Suite> const& suites() {
      static std::vector<Suite> const all{
          {"presentation", presentation},
          {"nc", nc},
          {"nf-oracle", nf_oracle},
          {"meet-right", [](SuiteOptions const&) { return meets(4, "meet-right", Side::right); }},
          {"meet-left", [](SuiteOptions const&) { return meets(5, "meet-left", Side::left); }},
          {"kappa", [](SuiteOptions const&) { return kappa_suite(); }},
          {"idempotent-annihilator",
           [](SuiteOptions const&) { return idempotent_annihilator(); }},
          {"green", [](SuiteOptions const&) { return green(); }},
          {"annihilator-witness", annihilator_witness_suite},
          {"chain", [](SuiteOptions const&) { return chain(); }},
          {"embedding", [](SuiteOptions const&) { return embedding(); }},
          {"star", star_suite}};
      return all;
    }

    CriterionResult timed(Suite const& s, SuiteOptions const& opts) {
      auto const start = std::chrono::steady_clock::now();
      auto       r     = s.run(opts);
      r.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& s : suites()) {
        out.push_back(s.name);
      }
      return out;
    }();
    return names;
  }

  std::vector<CriterionResult> run_suite(std::string const& name, SuiteOptions const& opts) {
    std::vector<CriterionResult> out;
    for (auto const& s : suites()) {
      if (name == "all" || name == s.name) {
        out.push_back(timed(s, opts));
      }
    }
    if (out.empty()) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return out;
  }

  std::string format_result(CriterionResult const& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " ("
       << static_cast<long long>(r.seconds * 1000) << " ms";
    if (r.time_limit > 0) {
      os << ", limit " << r.time_limit << " s";
    }
    os << "): " << r.detail;
    return os.str();
  }

}  // namespace semicoh
