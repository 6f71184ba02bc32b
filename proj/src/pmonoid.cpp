#include "semicoh/pmonoid.hpp"

#include <algorithm>      // for sort, unique, includes, set_union
#include <cstdlib>        // for abs
#include <deque>          // for deque
#include <iterator>       // for back_inserter
#include <sstream>        // for ostringstream
#include <stdexcept>      // for invalid_argument
#include <unordered_map>  // for unordered_map

namespace semicoh {

  NF::NF(std::vector<std::int64_t> excluded, std::int64_t shift)
      : _excluded(std::move(excluded)), _shift(shift) {
    std::sort(_excluded.begin(), _excluded.end());
    _excluded.erase(std::unique(_excluded.begin(), _excluded.end()), _excluded.end());
  }

  bool NF::defined_at(std::int64_t x) const {
    return !std::binary_search(_excluded.begin(), _excluded.end(), x);
  }

  std::int64_t NF::magnitude() const noexcept {
    std::int64_t m = std::abs(_shift);
    if (!_excluded.empty()) {
      m = std::max({m, std::abs(_excluded.front()), std::abs(_excluded.back())});
    }
    return m;
  }

  NF NF::inverse() const {
    std::vector<std::int64_t> ex(_excluded);
    for (auto& x : ex) {
      x += _shift;
    }
    return NF(std::move(ex), -_shift);
  }

  NF operator*(NF const& a, NF const& b) {
    std::vector<std::int64_t> moved(b.excluded());
    for (auto& x : moved) {
      x -= a.shift();
    }
    std::vector<std::int64_t> ex;
    ex.reserve(a.excluded().size() + moved.size());
    std::set_union(a.excluded().begin(), a.excluded().end(), moved.begin(), moved.end(),
                   std::back_inserter(ex));
    return NF(std::move(ex), a.shift() + b.shift());
  }

  NF nf_of_word(std::string_view word) {
    NF out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      switch (word[i]) {
        case 'g':
          out = out * NF::g();
          break;
        case 'h':
          out = out * NF::h();
          break;
        case 'e':
          out = out * NF::e();
          break;
        default:
          throw std::invalid_argument("bad symbol '" + std::string(1, word[i])
                                      + "' at position " + std::to_string(i)
                                      + ", expected one of g, h, e");
      }
    }
    return out;
  }

  PartialMap nf_window(NF const& a, std::int64_t N) {
    std::int64_t excl = 0;
    for (auto x : a.excluded()) {
      excl = std::max(excl, std::abs(x));
    }
    if (N < 1 || N < excl + std::abs(a.shift())) {
      throw std::invalid_argument("window radius " + std::to_string(N)
                                  + " is too small for the element");
    }
    std::vector<std::int32_t> im(static_cast<std::size_t>(2 * N + 1), PartialMap::UNDEFINED);
    for (std::int64_t x = -N; x <= N; ++x) {
      auto const y = x + a.shift();
      if (a.defined_at(x) && y >= -N && y <= N) {
        im[static_cast<std::size_t>(x + N)] = static_cast<std::int32_t>(y + N);
      }
    }
    return PartialMap(std::move(im));
  }

  bool is_idempotent(NF const& a) noexcept {
    return a.shift() == 0;
  }

  bool nf_natural_leq(NF const& a, NF const& b) {
    if (!is_idempotent(a) || !is_idempotent(b)) {
      throw std::invalid_argument("natural order compares idempotents only");
    }
    return std::includes(a.excluded().begin(), a.excluded().end(), b.excluded().begin(),
                         b.excluded().end());
  }

  bool nf_leq_R(NF const& u, NF const& v) {
    return std::includes(u.excluded().begin(), u.excluded().end(), v.excluded().begin(),
                         v.excluded().end());
  }

  namespace {
    std::string repeat(char c, std::size_t k) {
      return std::string(k, c);
    }

    // g^k e h^k and h^k e g^k
    NF conj_g(std::int64_t k) {
      return NF::power_of_g(k) * NF::e() * NF::power_of_g(-k);
    }
    NF conj_h(std::int64_t k) {
      return conj_g(-k);
    }
  }  // namespace

  std::vector<Relation> presentation_relations(std::size_t K) {
    std::vector<Relation> out{{"hg=gh", "hg", "gh"},
                              {"ghg=g", "ghg", "g"},
                              {"hgh=h", "hgh", "h"},
                              {"ghe=e", "ghe", "e"},
                              {"egh=e", "egh", "e"},
                              {"e=ee", "e", "ee"}};
    for (std::size_t k = 1; k <= K; ++k) {
      auto const gk = repeat('g', k), hk = repeat('h', k), ks = std::to_string(k);
      out.push_back({"eg^keh^k=g^keh^ke k=" + ks, "e" + gk + "e" + hk, gk + "e" + hk + "e"});
      out.push_back({"eh^keg^k=h^keg^ke k=" + ks, "e" + hk + "e" + gk, hk + "e" + gk + "e"});
    }
    return out;
  }

  std::optional<Relation> first_failing_relation(std::vector<Relation> const& relations) {
    for (auto const& r : relations) {
      if (nf_of_word(r.lhs) != nf_of_word(r.rhs)) {
        return r;
      }
    }
    return std::nullopt;
  }

  bool check_presentation(std::size_t K) {
    return !first_failing_relation(presentation_relations(K)).has_value();
  }

  NcReport check_nc_report(std::size_t N) {
    auto const     e = NF::e();
    auto const     g = NF::g(), h = NF::h();
    auto           fail = [](std::string what) { return NcReport{false, std::move(what)}; };
    auto const     Ns = static_cast<std::int64_t>(N);

    if (!(h * g * e == e && e * h * g == e)) {
      return fail("NC1: hge = e = ehg");
    }
    for (std::int64_t n = 1; n <= Ns; ++n) {
      if (e * conj_g(n) != conj_g(n) * e || e * conj_h(n) != conj_h(n) * e) {
        return fail("NC2 at n=" + std::to_string(n));
      }
    }
    for (std::int64_t m = 1; m <= Ns; ++m) {
      for (std::int64_t n = 1; n <= Ns; ++n) {
        auto const mn = " at m=" + std::to_string(m) + " n=" + std::to_string(n);
        if (nf_natural_leq(conj_g(m), conj_h(n)) || nf_natural_leq(conj_h(n), conj_g(m))) {
          return fail("NC3 g^meh^m vs h^neg^n" + mn);
        }
        if (m != n
            && (nf_natural_leq(conj_g(m), conj_g(n)) || nf_natural_leq(conj_h(m), conj_h(n)))) {
          return fail("NC3 distinct conjugates comparable" + mn);
        }
      }
    }
    for (std::int64_t n = 1; n <= Ns; ++n) {
      auto const x = e * conj_g(n);
      for (std::int64_t k = 1; k <= n; ++k) {
        auto const nk = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (k < n && nf_natural_leq(x, conj_g(k))) {
          return fail("NC4 eg^neh^n <= g^keh^k" + nk);
        }
        if (nf_natural_leq(x, conj_h(k))) {
          return fail("NC4 eg^neh^n <= h^keg^k" + nk);
        }
      }
    }
    return {};
  }

  bool check_nc(std::size_t N) {
    return check_nc_report(N).holds;
  }

  AnnihilatorVerdict in_annihilator(NF const& u, NF const& v) {
    auto const eu = NF::e() * u;
    auto const ev = NF::e() * v;
    auto const d  = ev.shift() - eu.shift();
    AnnihilatorVerdict out;
    out.n      = std::abs(d);
    out.side   = d >= 0 ? 'g' : 'h';
    out.member = NF::power_of_g(d) * eu == ev;
    return out;
  }

  std::vector<std::pair<NF, NF>> y_n(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("Y_n needs n >= 1");
    }
    std::vector<std::pair<NF, NF>> out{{NF::identity(), NF::e()}};
    for (std::size_t k = 1; k <= n; ++k) {
      auto const ks = static_cast<std::int64_t>(k);
      out.emplace_back(NF::power_of_g(ks) * NF::e(), conj_h(ks));
    }
    for (std::size_t k = 1; k <= n; ++k) {
      auto const ks = static_cast<std::int64_t>(k);
      out.emplace_back(NF::power_of_g(-ks) * NF::e(), conj_g(ks));
    }
    return out;
  }

  YSequence<NF> annihilator_witness(NF const& u, NF const& v) {
    auto const verdict = in_annihilator(u, v);
    if (!verdict.member) {
      throw std::invalid_argument("pair is not in the annihilator");
    }
    auto const one = NF::identity(), e = NF::e();
    auto const eu = e * u, ev = e * v;
    if (verdict.n == 0) {
      if (u == v) {
        return {u, v, {}};
      }
      if (v == eu) {
        return {u, v, {{one, e, u}}};
      }
      if (u == ev) {
        return {u, v, {{e, one, v}}};
      }
      return {u, v, {{one, e, u}, {e, one, v}}};
    }
    // v ~ ev = c(eu) ~ d(eu) = eu ~ u, where (c, d) = (g^n e, h^n e g^n) on
    // the g side and (h^n e, g^n e h^n) on the h side
    auto const k = verdict.side == 'g' ? verdict.n : -verdict.n;
    auto const c = NF::power_of_g(k) * e;
    auto const d = conj_g(-k);
    YSequence<NF> from_v{v, u, {{one, e, v}, {c, d, eu}, {e, one, u}}};
    return from_v.reversed();
  }

  bool validate(YSequence<NF> const& seq, std::vector<std::pair<NF, NF>> const& pairs) {
    return validate(
        seq, [](NF const& x, NF const& y) { return x * y; },
        [&pairs](NF const& c, NF const& d) {
          for (auto const& [p, q] : pairs) {
            if ((p == c && q == d) || (p == d && q == c)) {
              return true;
            }
          }
          return false;
        });
  }

  std::vector<NF> left_factor_solutions(NF const& c, NF const& u) {
    auto const& Ec = c.excluded();
    auto const& Eu = u.excluded();
    if (!std::includes(Eu.begin(), Eu.end(), Ec.begin(), Ec.end())) {
      return {};
    }
    if (Ec.size() > 20) {
      throw std::invalid_argument("left factor has too many excluded points");
    }
    std::vector<std::int64_t> base;
    std::set_difference(Eu.begin(), Eu.end(), Ec.begin(), Ec.end(), std::back_inserter(base));
    std::vector<NF> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << Ec.size()); ++mask) {
      std::vector<std::int64_t> Et = base;
      for (std::size_t i = 0; i < Ec.size(); ++i) {
        if (mask & (std::size_t(1) << i)) {
          Et.push_back(Ec[i]);
        }
      }
      for (auto& x : Et) {
        x += c.shift();
      }
      out.emplace_back(std::move(Et), u.shift() - c.shift());
    }
    return out;
  }

  ChainBounds default_chain_bounds(std::size_t n) {
    return {n + 2, static_cast<std::int64_t>(3 * n), 8};
  }

  ChainReport chain_search(std::size_t n, ChainBounds const& bounds,
                           std::optional<std::size_t> generators_index) {
    if (n < 2) {
      throw std::invalid_argument("chain search needs n >= 2");
    }
    ChainReport report;
    report.n                = n;
    report.generators_index = generators_index.value_or(n - 1);
    report.bounds           = bounds;

    auto const ns     = static_cast<std::int64_t>(n);
    auto const start  = NF::power_of_g(ns) * NF::e();
    auto const target = conj_h(ns);
    auto const Y      = y_n(report.generators_index);

    std::vector<std::pair<NF, NF>> links;
    for (auto const& [c, d] : Y) {
      links.emplace_back(c, d);
      links.emplace_back(d, c);
    }

    struct Node {
      NF          state;
      std::size_t parent;
      YStep<NF>   step;
      std::size_t depth;
    };
    std::vector<Node>                   nodes{{start, 0, {}, 0}};
    std::unordered_map<NF, std::size_t> seen{{start, 0}};
    std::deque<std::size_t>             queue{0};

    auto within = [&bounds](NF const& x) {
      return x.excluded().size() <= bounds.max_excluded && x.magnitude() <= bounds.max_magnitude;
    };
    auto finish = [&](std::size_t id) {
      report.reached = true;
      YSequence<NF> seq{start, target, {}};
      for (; id != 0; id = nodes[id].parent) {
        seq.steps.push_back(nodes[id].step);
      }
      std::reverse(seq.steps.begin(), seq.steps.end());
      report.witness = std::move(seq);
    };

    if (start == target) {
      finish(0);
      return report;
    }
    while (!queue.empty()) {
      auto const id = queue.front();
      queue.pop_front();
      ++report.explored;
      if (nodes[id].depth >= bounds.max_length) {
        continue;
      }
      for (auto const& [c, d] : links) {
        for (auto const& t : left_factor_solutions(c, nodes[id].state)) {
          NF next = d * t;
          if (seen.count(next) != 0) {
            continue;
          }
          if (!within(next)) {
            ++report.pruned;
            continue;
          }
          seen.emplace(next, nodes.size());
          nodes.push_back({next, id, {c, d, t}, nodes[id].depth + 1});
          if (next == target) {
            finish(nodes.size() - 1);
            return report;
          }
          queue.push_back(nodes.size() - 1);
        }
      }
    }
    return report;
  }

}  // namespace semicoh
