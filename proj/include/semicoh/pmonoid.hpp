// Exact arithmetic in the inverse monoid P = P(g, h, e) through its normal
// forms, together with checkers for its defining relations, the
// non-coherency conditions NC1-NC4, the right annihilator r(e rho) for
// rho = <(1, g)>, and a bounded search over Y_n-sequences.
//
// An element is stored as (E, k): the partial bijection x -> x + k of the
// integers, undefined exactly on the finite set E. The generators are
// g = ({}, +1), h = ({}, -1) and e = ({0}, 0), and maps compose left to
// right, so words are evaluated from their first letter.

#ifndef SEMICOH_PMONOID_HPP_
#define SEMICOH_PMONOID_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t
#include <functional>   // for hash
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "congruence.hpp"   // for YSequence
#include "partial_map.hpp"  // for PartialMap

namespace semicoh {

  class NF {
   public:
    NF() = default;
    //! Sorts and deduplicates the excluded points.
    NF(std::vector<std::int64_t> excluded, std::int64_t shift);

    static NF identity() {
      return NF();
    }
    static NF g() {
      return NF({}, 1);
    }
    static NF h() {
      return NF({}, -1);
    }
    static NF e() {
      return NF({0}, 0);
    }
    //! g^k for k >= 0 and h^-k for k < 0.
    static NF power_of_g(std::int64_t k) {
      return NF({}, k);
    }

    std::vector<std::int64_t> const& excluded() const noexcept {
      return _excluded;
    }
    std::int64_t shift() const noexcept {
      return _shift;
    }
    bool defined_at(std::int64_t x) const;

    //! Largest absolute value among the excluded points and the shift.
    std::int64_t magnitude() const noexcept;

    //! The group-theoretic inverse in P: (E + k, -k).
    NF inverse() const;

    bool operator==(NF const&) const = default;
    auto operator<=>(NF const&) const = default;

   private:
    std::vector<std::int64_t> _excluded;
    std::int64_t              _shift = 0;
  };

  //! (E_a, k_a)(E_b, k_b) = (E_a u (E_b - k_a), k_a + k_b).
  NF operator*(NF const& a, NF const& b);

  //! Left-to-right evaluation of a word over {g, h, e}; the empty word is the
  //! identity. Throws std::invalid_argument naming the offending position.
  NF nf_of_word(std::string_view word);

  //! The restriction of `a` to {-N, ..., N}, as a partial map on 2N + 1 points
  //! where index i stands for the integer i - N. Points whose image leaves the
  //! window are undefined. Throws std::invalid_argument if N is smaller than
  //! the largest excluded magnitude plus |shift|.
  PartialMap nf_window(NF const& a, std::int64_t N);

  bool is_idempotent(NF const& a) noexcept;

  //! Natural order on idempotents: (E, 0) <= (F, 0) iff F is contained in E.
  //! Throws std::invalid_argument for non-idempotents.
  bool nf_natural_leq(NF const& a, NF const& b);

  //! u <=_R v iff E_v is contained in E_u (since uu* = (E_u, 0)).
  bool nf_leq_R(NF const& u, NF const& v);

  struct Relation {
    std::string name;
    std::string lhs;
    std::string rhs;
  };

  //! The defining relations of P, with the two infinite families
  //! instantiated for 1 <= k <= K.
  std::vector<Relation> presentation_relations(std::size_t K);

  //! The first relation whose sides have different normal forms, if any.
  std::optional<Relation> first_failing_relation(std::vector<Relation> const& relations);

  bool check_presentation(std::size_t K);

  struct NcReport {
    bool        holds = true;
    std::string failure;
  };

  //! NC1-NC4 for all indices up to N, comparing idempotents in the natural
  //! order.
  NcReport check_nc_report(std::size_t N);
  bool     check_nc(std::size_t N);

  struct AnnihilatorVerdict {
    bool         member = false;
    std::int64_t n      = 0;
    //! 'g' if g^n eu = ev, 'h' if h^n eu = ev.
    char side = 'g';
  };

  //! Decides (u, v) in r(e rho), rho = <(1, g)>: the shifts force the only
  //! candidate n and side, and that one equation is checked.
  AnnihilatorVerdict in_annihilator(NF const& u, NF const& v);

  //! The pairs of Y_n: (1, e), (g^k e, h^k e g^k) and (h^k e, g^k e h^k) for
  //! 0 < k <= n.
  std::vector<std::pair<NF, NF>> y_n(std::size_t n);

  //! A Y_n-sequence from u to v for a pair accepted by in_annihilator, using
  //! generators with index n of the verdict. Throws std::invalid_argument if
  //! the pair is not in the annihilator.
  YSequence<NF> annihilator_witness(NF const& u, NF const& v);

  //! True iff every junction of `seq` holds in P and every link uses a pair of
  //! `pairs` or its inverse.
  bool validate(YSequence<NF> const& seq, std::vector<std::pair<NF, NF>> const& pairs);

  //! Every t with ct = u.
  std::vector<NF> left_factor_solutions(NF const& c, NF const& u);

  struct ChainBounds {
    std::size_t  max_excluded  = 0;
    std::int64_t max_magnitude = 0;
    std::size_t  max_length    = 0;
  };

  //! |E| <= n + 2, magnitude <= 3n, at most 8 links.
  ChainBounds default_chain_bounds(std::size_t n);

  //! Outcome of the bounded search. `reached == false` only certifies that no
  //! sequence exists inside the bounds.
  struct ChainReport {
    std::size_t                  n                 = 0;
    std::size_t                  generators_index  = 0;
    bool                         reached           = false;
    std::size_t                  explored          = 0;
    std::size_t                  pruned            = 0;
    ChainBounds                  bounds;
    std::optional<YSequence<NF>> witness;
  };

  //! Breadth-first search for a Y_m-sequence from g^n e to h^n e g^n, where m
  //! is `generators_index` (n - 1 when omitted). States outside the bounds are
  //! discarded.
  ChainReport chain_search(std::size_t n, ChainBounds const& bounds,
                           std::optional<std::size_t> generators_index = std::nullopt);

}  // namespace semicoh

template <>
struct std::hash<semicoh::NF> {
  std::size_t operator()(semicoh::NF const& a) const noexcept {
    auto h = std::hash<std::int64_t>{}(a.shift());
    for (auto x : a.excluded()) {
      h = h * 1'000'003 ^ std::hash<std::int64_t>{}(x);
    }
    return h;
  }
};

#endif  // SEMICOH_PMONOID_HPP_
