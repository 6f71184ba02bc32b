// semicoh: command-line front end to the library.
//
// Exit status: 0 on success, 1 if a checked property fails, 2 on usage or
// parse errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "semicoh/congruence.hpp"
#include "semicoh/ideals.hpp"
#include "semicoh/io.hpp"
#include "semicoh/monoids.hpp"
#include "semicoh/order.hpp"
#include "semicoh/pmonoid.hpp"
#include "semicoh/suites.hpp"

using namespace semicoh;

namespace {

  constexpr int OK = 0, VIOLATED = 1, USAGE = 2;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  Kind parse_kind(std::string const& s) {
    if (s == "T") return Kind::T;
    if (s == "PT") return Kind::PT;
    if (s == "I") return Kind::I;
    if (s == "P") return Kind::P;
    throw UsageError("unknown kind '" + s + "', expected one of T, PT, I, P");
  }

  Side parse_side(std::string const& s) {
    if (s == "R" || s == "right") return Side::right;
    if (s == "L" || s == "left") return Side::left;
    throw UsageError("unknown side '" + s + "', expected R or L");
  }

  PartialMap map_of_kind(Kind kind, std::string const& text) {
    auto a = parse_partial_map(text);
    if (!a.is_of_kind(kind)) {
      throw UsageError("'" + text + "' is not an element of " + kind_name(kind));
    }
    return a;
  }

  template <typename E>
  std::size_t common_degree(std::vector<E> const& xs) {
    if (xs.empty()) {
      throw UsageError("no elements given");
    }
    for (auto const& x : xs) {
      if (x.degree() != xs.front().degree()) {
        throw UsageError("elements have different degrees");
      }
    }
    return xs.front().degree();
  }

  // Runs f with the full monoid of the given kind and the parsed elements.
  template <typename F>
  int with_monoid(std::string const& kind_text, std::vector<std::string> const& texts, F&& f) {
    auto const kind = parse_kind(kind_text);
    if (kind == Kind::P) {
      std::vector<Partition> xs;
      for (auto const& t : texts) xs.push_back(parse_partition(t));
      auto const S = partition_monoid(common_degree(xs));
      return f(S, xs);
    }
    std::vector<PartialMap> xs;
    for (auto const& t : texts) xs.push_back(map_of_kind(kind, t));
    auto const S = map_monoid(kind, common_degree(xs));
    return f(S, xs);
  }

  template <typename E>
  void print_classes(FiniteMonoid<E> const& S, RightCongruence const& rho) {
    std::cout << "classes " << rho.number_of_classes() << "\n";
    for (auto const& c : rho.classes().classes()) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::cout << (i == 0 ? "" : " ; ") << to_string(S.at(c[i]));
      }
      std::cout << "\n";
    }
  }

  void print_sequence(YSequence<NF> const& seq) {
    std::cout << "from " << to_string(seq.from) << "\n";
    for (auto const& st : seq.steps) {
      std::cout << "  c=" << to_string(st.c) << " d=" << to_string(st.d)
                << " t=" << to_string(st.t) << "\n";
    }
    std::cout << "to " << to_string(seq.to) << "\n";
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial maps, partitions and the monoid P(g,h,e)"};
  app.require_subcommand(1);

  std::string kind = "T", side = "R";
  std::vector<std::string> elems;

  auto* mul = app.add_subcommand("mul", "product of elements, left to right");
  mul->add_option("--kind", kind, "T, PT, I, P or NF")->capture_default_str();
  mul->allow_extras();

  auto* green = app.add_subcommand("green", "Green's preorder a <= b");
  green->add_option("--kind", kind)->capture_default_str();
  green->add_option("--side", side, "R or L")->capture_default_str();
  green->add_option("elements", elems)->required()->expected(2)->allow_extra_args(false);

  auto* meet = app.add_subcommand("meet", "generator of the intersection of principal ideals");
  meet->add_option("--kind", kind)->capture_default_str();
  meet->add_option("--side", side)->capture_default_str();
  meet->add_option("elements", elems)->required()->expected(2)->allow_extra_args(false);

  auto* close = app.add_subcommand("cong-close", "right congruence generated by pairs a1 b1 a2 b2 ...");
  close->add_option("--kind", kind)->capture_default_str();
  close->allow_extras();

  auto* ann = app.add_subcommand("annihilator",
                                 "r(a rho) for rho generated by the pairs following a (default: equality)");
  ann->add_option("--kind", kind)->capture_default_str();
  ann->allow_extras();

  auto*       pm = app.add_subcommand("pmonoid", "queries on P(g,h,e)");
  std::size_t k = 50, n = 2;
  std::optional<std::size_t>  gens;
  std::optional<std::size_t>  max_excluded, max_length;
  std::optional<std::int64_t> max_magnitude;
  pm->require_subcommand(1);
  auto* rel = pm->add_subcommand("relations", "check the defining relations up to --k");
  rel->add_option("--k", k)->capture_default_str();
  auto* ncs = pm->add_subcommand("nc", "check NC1-NC4 up to --n");
  ncs->add_option("--n", n)->capture_default_str();
  auto* pann = pm->add_subcommand("ann", "decide (u,v) in r(e rho) and print a witness");
  pann->add_option("elements", elems)->required()->expected(2)->allow_extra_args(false);
  auto* chain = pm->add_subcommand("chain", "bounded search for g^n e -> h^n e g^n");
  chain->add_option("--n", n)->capture_default_str();
  chain->add_option("--generators", gens, "index m of Y_m (default n-1)");
  chain->add_option("--max-excluded", max_excluded);
  chain->add_option("--max-magnitude", max_magnitude);
  chain->add_option("--max-length", max_length);

  auto* render = app.add_subcommand("render", "DOT drawing of a partition");
  render->add_option("element", elems)->required()->expected(1)->allow_extra_args(false);

  auto*        verify = app.add_subcommand("verify", "run an acceptance suite");
  std::string  suite;
  SuiteOptions opts;
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--seed", opts.seed)->capture_default_str();
  verify->add_option("--k", opts.presentation_k)->capture_default_str();
  verify->add_option("--n", opts.nc_n)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return USAGE;
  }

  for (auto* sub : {mul, close, ann}) {
    if (sub->parsed()) {
      elems = sub->remaining();
      if (elems.empty()) {
        std::cerr << "error: " << sub->get_name() << " needs at least one element\n";
        return USAGE;
      }
    }
  }

  try {
    if (*mul) {
      if (kind == "NF") {
        NF acc = NF::identity();
        for (auto const& t : elems) acc = acc * parse_nf_or_word(t);
        std::cout << to_string(acc) << "\n";
        return OK;
      }
      return with_monoid(kind, elems, [](auto const&, auto const& xs) {
        auto acc = xs.front();
        for (std::size_t i = 1; i < xs.size(); ++i) acc = acc * xs[i];
        std::cout << to_string(acc) << "\n";
        return OK;
      });
    }
    if (*green) {
      auto const s = parse_side(side);
      auto const K = parse_kind(kind);
      bool       holds;
      if (K == Kind::P) {
        auto const a = parse_partition(elems[0]), b = parse_partition(elems[1]);
        holds = s == Side::right ? leq_R(a, b) : leq_L(a, b);
      } else {
        auto const a = map_of_kind(K, elems[0]), b = map_of_kind(K, elems[1]);
        holds = s == Side::right ? leq_R(K, a, b) : leq_L(K, a, b);
      }
      std::cout << (holds ? "true" : "false") << "\n";
      return OK;
    }
    if (*meet) {
      auto const s = parse_side(side);
      auto const K = parse_kind(kind);
      auto print = [](auto const& r) {
        std::cout << (r.empty() ? std::string("EMPTY") : to_string(*r.generator)) << "\n";
        return OK;
      };
      if (K == Kind::P) {
        auto const a = parse_partition(elems[0]), b = parse_partition(elems[1]);
        return print(s == Side::right ? meet_right_partition(a, b) : meet_left_partition(a, b));
      }
      auto const a = map_of_kind(K, elems[0]), b = map_of_kind(K, elems[1]);
      return print(s == Side::right ? meet_right_pt(a, b) : meet_left(K, a, b));
    }
    if (*close || *ann) {
      bool const is_ann = ann->parsed();
      if ((elems.size() - (is_ann ? 1 : 0)) % 2 != 0) {
        throw UsageError("pairs need an even number of elements");
      }
      return with_monoid(kind, elems, [is_ann](auto const& S, auto const& xs) {
        std::size_t const        first = is_ann ? 1 : 0;
        std::vector<IndexPair> Y;
        for (std::size_t i = first; i + 1 < xs.size(); i += 2) {
          Y.emplace_back(S.index(xs[i]), S.index(xs[i + 1]));
        }
        auto const rho = rc_close(S, Y);
        print_classes(S, is_ann ? annihilator(S, rho, S.index(xs[0])) : rho);
        return OK;
      });
    }
    if (*rel) {
      auto const bad = first_failing_relation(presentation_relations(k));
      if (bad) {
        std::cout << "FAIL " << bad->name << "\n";
        return VIOLATED;
      }
      std::cout << "ok: all relations hold for k <= " << k << "\n";
      return OK;
    }
    if (*ncs) {
      auto const r = check_nc_report(n);
      std::cout << (r.holds ? "ok: NC1-NC4 hold for indices <= " + std::to_string(n)
                            : "FAIL " + r.failure)
                << "\n";
      return r.holds ? OK : VIOLATED;
    }
    if (*pann) {
      auto const u = parse_nf_or_word(elems[0]), v = parse_nf_or_word(elems[1]);
      auto const verdict = in_annihilator(u, v);
      if (!verdict.member) {
        std::cout << "no\n";
        return OK;
      }
      std::cout << "yes n=" << verdict.n << " side=" << verdict.side << "\n";
      auto const seq = annihilator_witness(u, v);
      print_sequence(seq);
      auto const m = static_cast<std::size_t>(std::max<std::int64_t>(verdict.n, 1));
      return validate(seq, y_n(m)) ? OK : VIOLATED;
    }
    if (*chain) {
      auto bounds = default_chain_bounds(n);
      if (max_excluded) bounds.max_excluded = *max_excluded;
      if (max_magnitude) bounds.max_magnitude = *max_magnitude;
      if (max_length) bounds.max_length = *max_length;
      auto const r = chain_search(n, bounds, gens);
      std::cout << "n=" << r.n << " generators=Y_" << r.generators_index
                << " reached=" << (r.reached ? "true" : "false") << " explored=" << r.explored
                << " pruned=" << r.pruned << " bounds: |E|<=" << r.bounds.max_excluded
                << " magnitude<=" << r.bounds.max_magnitude
                << " length<=" << r.bounds.max_length << "\n";
      if (r.witness) print_sequence(*r.witness);
      // below index n the target must stay out of reach
      bool const expected = r.reached == (r.generators_index >= r.n);
      return expected ? OK : VIOLATED;
    }
    if (*render) {
      std::cout << render_partition(parse_partition(elems[0]));
      return OK;
    }
    if (*verify) {
      bool all = true;
      for (auto const& r : run_suite(suite, opts)) {
        std::cout << format_result(r) << "\n";
        all = all && r.passed();
      }
      return all ? OK : VIOLATED;
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return USAGE;
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return USAGE;
  } catch (CapExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return USAGE;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return USAGE;
  } catch (std::out_of_range const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return USAGE;
  }
  return USAGE;
}
