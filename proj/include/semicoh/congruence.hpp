// Right congruences on finite monoids: closure of a generating set of pairs,
// Y-sequence witnesses, right annihilators, and the congruence generated by a
// single pair (1, s).
//
// Left congruences are the right congruences of FiniteMonoid::opposite().

#ifndef SEMICOH_CONGRUENCE_HPP_
#define SEMICOH_CONGRUENCE_HPP_

#include <cstddef>    // for size_t
#include <deque>      // for deque
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <utility>    // for pair
#include <vector>     // for vector

#include "eqrel.hpp"          // for EqRel, UnionFind
#include "finite_monoid.hpp"  // for FiniteMonoid

namespace semicoh {

  using IndexPair = std::pair<std::size_t, std::size_t>;

  //! One link (c, d, t) of a Y-sequence, with (c, d) in Y or its inverse.
  template <typename V>
  struct YStep {
    V c;
    V d;
    V t;

    bool operator==(YStep const&) const = default;
  };

  //! a = c_1 t_1, d_1 t_1 = c_2 t_2, ..., d_m t_m = b.
  //! An empty step list witnesses a = b.
  template <typename V>
  struct YSequence {
    V                     from;
    V                     to;
    std::vector<YStep<V>> steps;

    //! The same chain read from b to a.
    YSequence reversed() const {
      YSequence out{to, from, {}};
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        out.steps.push_back({it->d, it->c, it->t});
      }
      return out;
    }
  };

  //! Re-checks every equation of a Y-sequence. `mul(x, y)` is the product and
  //! `in_y(c, d)` must accept exactly the pairs of Y and of its inverse.
  template <typename V, typename Mul, typename InY>
  bool validate(YSequence<V> const& seq, Mul&& mul, InY&& in_y) {
    if (seq.steps.empty()) {
      return seq.from == seq.to;
    }
    V current = seq.from;
    for (auto const& st : seq.steps) {
      if (!in_y(st.c, st.d) || !(mul(st.c, st.t) == current)) {
        return false;
      }
      current = mul(st.d, st.t);
    }
    return current == seq.to;
  }

  //! One union performed by the closure: x = c t and y = d t for the
  //! generating pair (c, d) = Y[pair].
  struct MergeRecord {
    std::size_t x;
    std::size_t y;
    std::size_t pair;
    std::size_t t;
  };

  class RightCongruence {
   public:
    RightCongruence() = default;
    RightCongruence(EqRel classes, std::vector<IndexPair> pairs = {},
                    std::vector<MergeRecord> trace = {})
        : _classes(std::move(classes)), _pairs(std::move(pairs)), _trace(std::move(trace)) {}

    static RightCongruence equality(std::size_t size) {
      return RightCongruence(EqRel::identity(size));
    }

    EqRel const& classes() const noexcept {
      return _classes;
    }
    bool related(std::size_t a, std::size_t b) const {
      return _classes.related(a, b);
    }
    std::size_t number_of_classes() const noexcept {
      return _classes.number_of_classes();
    }
    //! The generating pairs Y (empty for congruences not built by closure).
    std::vector<IndexPair> const& generating_pairs() const noexcept {
      return _pairs;
    }
    std::vector<MergeRecord> const& trace() const noexcept {
      return _trace;
    }

    //! Equality as relations; generating data is ignored.
    bool operator==(RightCongruence const& that) const {
      return _classes == that._classes;
    }

   private:
    EqRel                    _classes;
    std::vector<IndexPair>   _pairs;
    std::vector<MergeRecord> _trace;
  };

  //! True iff related pairs stay related after right multiplication by every
  //! generator of S (hence by every element).
  template <MonoidElement E>
  bool is_right_compatible(FiniteMonoid<E> const& S, EqRel const& rel) {
    std::vector<std::size_t> rep(rel.number_of_classes(), S.size());
    for (std::size_t a = 0; a < S.size(); ++a) {
      auto& r = rep[static_cast<std::size_t>(rel.label(a))];
      if (r == S.size()) {
        r = a;
        continue;
      }
      for (auto s : S.generators()) {
        if (!rel.related(S.product(a, s), S.product(r, s))) {
          return false;
        }
      }
    }
    return true;
  }

  //! The least right congruence containing Y. Union-find with a worklist: each
  //! union of (x, y) enqueues (xs, ys) for every generator s.
  template <MonoidElement E>
  RightCongruence rc_close(FiniteMonoid<E> const& S, std::vector<IndexPair> const& Y) {
    for (auto const& [c, d] : Y) {
      if (c >= S.size() || d >= S.size()) {
        throw std::out_of_range("generating pair outside the monoid");
      }
    }
    UnionFind                uf(S.size());
    std::deque<MergeRecord>  work;
    std::vector<MergeRecord> trace;
    for (std::size_t i = 0; i < Y.size(); ++i) {
      work.push_back({Y[i].first, Y[i].second, i, 0});
    }
    while (!work.empty()) {
      auto const item = work.front();
      work.pop_front();
      if (!uf.unite(item.x, item.y)) {
        continue;
      }
      trace.push_back(item);
      for (auto s : S.generators()) {
        work.push_back(
            {S.product(item.x, s), S.product(item.y, s), item.pair, S.product(item.t, s)});
      }
    }
    std::vector<std::int32_t> labels(S.size());
    for (std::size_t a = 0; a < S.size(); ++a) {
      labels[a] = static_cast<std::int32_t>(uf.find(a));
    }
    return RightCongruence(EqRel::from_labels(labels), Y, std::move(trace));
  }

  //! A Y-sequence from a to b reconstructed from the merge trace, or nullopt
  //! when (a, b) is not in the congruence. The path is taken through the
  //! forest of unions, so it is not necessarily a shortest sequence.
  template <MonoidElement E>
  std::optional<YSequence<std::size_t>> y_sequence(FiniteMonoid<E> const&  S,
                                                   RightCongruence const& rho,
                                                   std::size_t            a,
                                                   std::size_t            b) {
    if (a >= S.size() || b >= S.size()) {
      throw std::out_of_range("element index out of range");
    }
    if (a == b) {
      return YSequence<std::size_t>{a, b, {}};
    }
    if (!rho.related(a, b)) {
      return std::nullopt;
    }
    auto const& trace = rho.trace();
    auto const& Y     = rho.generating_pairs();
    // adjacency of the union forest: (record index, forward?)
    std::vector<std::vector<std::pair<std::size_t, bool>>> adj(S.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
      adj[trace[i].x].emplace_back(i, true);
      adj[trace[i].y].emplace_back(i, false);
    }
    constexpr std::size_t             NONE = static_cast<std::size_t>(-1);
    std::vector<std::size_t>          via(S.size(), NONE);
    std::vector<bool>                 seen(S.size(), false);
    std::deque<std::size_t>           queue{a};
    seen[a] = true;
    while (!queue.empty() && !seen[b]) {
      auto const u = queue.front();
      queue.pop_front();
      for (auto [i, forward] : adj[u]) {
        auto const v = forward ? trace[i].y : trace[i].x;
        if (!seen[v]) {
          seen[v] = true;
          via[v]  = i;
          queue.push_back(v);
        }
      }
    }
    if (!seen[b]) {
      // congruences without a trace (e.g. annihilators) have no witnesses
      return std::nullopt;
    }
    std::vector<YStep<std::size_t>> steps;
    for (std::size_t v = b; v != a;) {
      auto const& rec   = trace[via[v]];
      auto const [c, d] = Y[rec.pair];
      if (rec.y == v) {
        steps.push_back({c, d, rec.t});
        v = rec.x;
      } else {
        steps.push_back({d, c, rec.t});
        v = rec.y;
      }
    }
    std::reverse(steps.begin(), steps.end());
    return YSequence<std::size_t>{a, b, std::move(steps)};
  }

  //! validate() specialised to a finite monoid and the generating pairs of rho.
  template <MonoidElement E>
  bool validate(FiniteMonoid<E> const& S, RightCongruence const& rho,
                YSequence<std::size_t> const& seq) {
    auto const& Y = rho.generating_pairs();
    return validate(
        seq, [&S](std::size_t x, std::size_t y) { return S.product(x, y); },
        [&Y](std::size_t c, std::size_t d) {
          for (auto const& [p, q] : Y) {
            if ((p == c && q == d) || (p == d && q == c)) {
              return true;
            }
          }
          return false;
        });
  }

  //! r(a rho) = {(u, v) : au rho av}, built directly from the definition.
  //! Throws std::logic_error if the result is not right compatible.
  template <MonoidElement E>
  RightCongruence annihilator(FiniteMonoid<E> const& S, RightCongruence const& rho,
                              std::size_t a) {
    if (a >= S.size()) {
      throw std::out_of_range("element index out of range");
    }
    std::vector<std::int32_t> labels(S.size());
    for (std::size_t u = 0; u < S.size(); ++u) {
      labels[u] = rho.classes().label(S.product(a, u));
    }
    auto rel = EqRel::from_labels(labels);
    if (!is_right_compatible(S, rel)) {
      throw std::logic_error("annihilator is not right compatible");
    }
    return RightCongruence(std::move(rel));
  }

  //! {(u, v) : s^m u = s^n v for some m, n >= 0}, from the powers of s.
  //! Throws std::logic_error if the relation is not an equivalence.
  template <MonoidElement E>
  RightCongruence kappa(FiniteMonoid<E> const& S, std::size_t s) {
    if (s >= S.size()) {
      throw std::out_of_range("element index out of range");
    }
    std::vector<std::size_t> powers{0};
    std::vector<bool>        is_power(S.size(), false);
    is_power[0] = true;
    for (auto p = S.product(0, s); !is_power[p]; p = S.product(p, s)) {
      is_power[p] = true;
      powers.push_back(p);
    }
    // orbit[u] = { s^m u }
    std::vector<std::vector<bool>> orbit(S.size(), std::vector<bool>(S.size(), false));
    for (std::size_t u = 0; u < S.size(); ++u) {
      for (auto p : powers) {
        orbit[u][S.product(p, u)] = true;
      }
    }
    UnionFind   uf(S.size());
    std::size_t related_pairs = 0;
    for (std::size_t u = 0; u < S.size(); ++u) {
      for (std::size_t v = 0; v < S.size(); ++v) {
        for (std::size_t x = 0; x < S.size(); ++x) {
          if (orbit[u][x] && orbit[v][x]) {
            ++related_pairs;
            uf.unite(u, v);
            break;
          }
        }
      }
    }
    std::vector<std::int32_t> labels(S.size());
    for (std::size_t u = 0; u < S.size(); ++u) {
      labels[u] = static_cast<std::int32_t>(uf.find(u));
    }
    auto        rel = EqRel::from_labels(labels);
    std::size_t closure_pairs = 0;
    for (auto const& c : rel.classes()) {
      closure_pairs += c.size() * c.size();
    }
    if (closure_pairs != related_pairs) {
      throw std::logic_error("kappa is not transitive");
    }
    return RightCongruence(std::move(rel));
  }

  class NotASubact : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! One representative of each <=_R-maximal R-class of the right ideal I.
  //! Throws NotASubact unless IS is contained in I, and std::logic_error if the
  //! representatives fail to generate I.
  template <MonoidElement E>
  std::vector<std::size_t> subact_generators(FiniteMonoid<E> const&          S,
                                             std::vector<std::size_t> const& I) {
    std::vector<bool> in_I(S.size(), false);
    for (auto i : I) {
      in_I.at(i) = true;
    }
    for (auto i : I) {
      for (auto s : S.generators()) {
        if (!in_I[S.product(i, s)]) {
          throw NotASubact("the set is not closed under right multiplication");
        }
      }
    }
    std::vector<std::vector<std::size_t>> ideal(S.size());
    std::vector<std::vector<bool>>        in_ideal(S.size());
    for (std::size_t a = 0; a < S.size(); ++a) {
      if (!in_I[a]) {
        continue;
      }
      ideal[a] = S.right_ideal(a);
      in_ideal[a].assign(S.size(), false);
      for (auto x : ideal[a]) {
        in_ideal[a][x] = true;
      }
    }
    std::vector<std::size_t> reps;
    std::vector<bool>        covered(S.size(), false);
    for (std::size_t a = 0; a < S.size(); ++a) {
      if (!in_I[a] || covered[a]) {
        continue;
      }
      bool maximal = true;
      for (std::size_t b = 0; b < S.size() && maximal; ++b) {
        // b strictly above a
        if (in_I[b] && in_ideal[b][a] && !in_ideal[a][b]) {
          maximal = false;
        }
      }
      if (!maximal) {
        continue;
      }
      reps.push_back(a);
      for (std::size_t b = 0; b < S.size(); ++b) {
        // mark the R-class of a
        if (in_I[b] && in_ideal[a][b] && in_ideal[b][a]) {
          covered[b] = true;
        }
      }
    }
    std::vector<bool> generated(S.size(), false);
    for (auto r : reps) {
      for (auto x : ideal[r]) {
        generated[x] = true;
      }
    }
    if (generated != in_I) {
      throw std::logic_error("maximal R-classes do not generate the ideal");
    }
    return reps;
  }

}  // namespace semicoh

#endif  // SEMICOH_CONGRUENCE_HPP_
