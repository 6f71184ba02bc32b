// Exhaustive and randomised verification suites, one per acceptance
// criterion. Shared by the acceptance test binary and `semicoh verify`.

#ifndef SEMICOH_SUITES_HPP_
#define SEMICOH_SUITES_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace semicoh {

  struct SuiteOptions {
    std::uint64_t seed           = 20211017;
    std::size_t   presentation_k = 50;
    std::size_t   nc_n           = 50;
  };

  struct CriterionResult {
    int         id = 0;
    std::string name;
    bool        correct = false;
    //! Wall-clock budget in seconds; 0 means unbounded.
    double      time_limit = 0;
    double      seconds    = 0;
    std::string detail;

    bool passed() const noexcept {
      return correct && (time_limit == 0 || seconds <= time_limit);
    }
  };

  //! Suite names in criterion order; "all" is accepted by run_suite as well.
  std::vector<std::string> const& suite_names();

  //! Runs one suite, or every suite for "all". Throws std::invalid_argument
  //! for an unknown name.
  std::vector<CriterionResult> run_suite(std::string const& name, SuiteOptions const& opts);

  //! "PASS [4] meet-right (12.3 ms): detail"
  std::string format_result(CriterionResult const& r);

}  // namespace semicoh

#endif  // SEMICOH_SUITES_HPP_
