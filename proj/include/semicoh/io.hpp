// Text forms of elements. Points are written 1-based.
//
//   partial map   [2,_,1]          entry i is the image of i, _ if undefined
//   partition     {1 2'}{2}{1'}    blocks of points, primed for the lower row
//   normal form   {-2,-1};+2       excluded integers, then the signed shift
//   word          gege             letters g, h, e
//
// Formatting always produces the canonical form, which parses back to the
// same element.

#ifndef SEMICOH_IO_HPP_
#define SEMICOH_IO_HPP_

#include <cstddef>      // for size_t
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view

#include "eqrel.hpp"        // for EqRel, Block
#include "partial_map.hpp"  // for PartialMap
#include "partition.hpp"    // for Partition
#include "pmonoid.hpp"      // for NF

namespace semicoh {

  //! A malformed or meaningless element text. `position` is a 0-based offset
  //! into the input; `expected` names what the parser wanted there (empty for
  //! semantic errors).
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t position, std::string expected);

    std::size_t position() const noexcept {
      return _position;
    }
    std::string const& expected() const noexcept {
      return _expected;
    }

   private:
    std::size_t _position;
    std::string _expected;
  };

  PartialMap parse_partial_map(std::string_view text);
  Partition  parse_partition(std::string_view text);
  NF         parse_nf(std::string_view text);
  //! Either a normal form (text starting with '{') or a word over g, h, e.
  NF parse_nf_or_word(std::string_view text);

  std::string to_string(PartialMap const& a);
  std::string to_string(Partition const& a);
  std::string to_string(NF const& a);
  //! Classes of an equivalence relation as {1 2}{3}, 1-based.
  std::string to_string(EqRel const& rel);

  //! Graphviz rendering with the upper row pinned above the lower row; each
  //! block is drawn as a path through its sorted points.
  std::string render_partition(Partition const& a);

}  // namespace semicoh

#endif  // SEMICOH_IO_HPP_
