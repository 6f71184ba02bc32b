#include "semicoh/io.hpp"

#include <cctype>   // for isdigit, isspace
#include <limits>   // for numeric_limits
#include <sstream>  // for ostringstream
#include <vector>   // for vector

namespace semicoh {

  ParseError::ParseError(std::string const& message, std::size_t position,
                         std::string expected)
      : std::runtime_error(message + " at position " + std::to_string(position)
                           + (expected.empty() ? "" : ", expected " + expected)),
        _position(position),
        _expected(std::move(expected)) {}

  namespace {

    class Cursor {
     public:
      explicit Cursor(std::string_view text) : _text(text) {}

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      bool at_end() {
        skip_space();
        return _pos == _text.size();
      }
      char peek() {
        skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }
      bool accept(char c) {
        if (peek() == c) {
          ++_pos;
          return true;
        }
        return false;
      }
      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("'") + c + "'");
        }
      }
      //! Unsigned decimal; the sign, if any, is read by the caller.
      std::int64_t number() {
        skip_space();
        std::size_t const start = _pos;
        std::int64_t      value = 0;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          auto const digit = _text[_pos] - '0';
          if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
            throw ParseError("number too large", start, "");
          }
          value = value * 10 + digit;
          ++_pos;
        }
        if (_pos == start) {
          fail("a digit");
        }
        return value;
      }
      std::size_t position() const noexcept {
        return _pos;
      }
      [[noreturn]] void fail(std::string expected) const {
        throw ParseError(_pos < _text.size() ? std::string("unexpected '") + _text[_pos] + "'"
                                             : std::string("unexpected end of input"),
                         _pos, std::move(expected));
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace

  PartialMap parse_partial_map(std::string_view text) {
    Cursor cur(text);
    cur.expect('[');
    std::vector<std::pair<std::int64_t, std::size_t>> entries;  // value (-1 = _), position
    if (!cur.accept(']')) {
      do {
        std::size_t const pos = (cur.skip_space(), cur.position());
        if (cur.accept('_')) {
          entries.emplace_back(-1, pos);
        } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
          entries.emplace_back(cur.number(), pos);
        } else {
          cur.fail("a point or '_'");
        }
      } while (cur.accept(','));
      cur.expect(']');
    }
    if (!cur.at_end()) {
      cur.fail("end of input");
    }
    auto const                n = static_cast<std::int64_t>(entries.size());
    std::vector<std::int32_t> im;
    for (auto [value, pos] : entries) {
      if (value == -1) {
        im.push_back(PartialMap::UNDEFINED);
      } else if (value < 1 || value > n) {
        throw ParseError("image " + std::to_string(value) + " outside 1.." + std::to_string(n),
                         pos, "");
      } else {
        im.push_back(static_cast<std::int32_t>(value - 1));
      }
    }
    return PartialMap(std::move(im));
  }

  Partition parse_partition(std::string_view text) {
    Cursor cur(text);
    struct Point {
      std::int64_t value;
      bool         primed;
      std::size_t  pos;
    };
    std::vector<std::vector<Point>> blocks;
    std::int64_t                    n = 0;
    do {
      cur.expect('{');
      blocks.emplace_back();
      do {
        std::size_t const pos   = (cur.skip_space(), cur.position());
        auto const        value = cur.number();
        if (value < 1) {
          throw ParseError("points are numbered from 1", pos, "");
        }
        bool const primed = cur.accept('\'');
        blocks.back().push_back({value, primed, pos});
        n = std::max(n, value);
      } while (cur.peek() != '}' && cur.peek() != '\0');
      cur.expect('}');
    } while (cur.peek() == '{');
    if (!cur.at_end()) {
      cur.fail("'{' or end of input");
    }
    auto const               nn = static_cast<std::size_t>(n);
    std::vector<bool>        used(2 * nn, false);
    std::vector<Block>       out;
    for (auto const& b : blocks) {
      out.emplace_back();
      for (auto const& p : b) {
        auto const idx = static_cast<std::size_t>(p.value - 1) + (p.primed ? nn : 0);
        if (used[idx]) {
          throw ParseError("point " + std::to_string(p.value) + (p.primed ? "'" : "")
                               + " occurs twice",
                           p.pos, "");
        }
        used[idx] = true;
        out.back().push_back(idx);
      }
    }
    for (std::size_t i = 0; i < 2 * nn; ++i) {
      if (!used[i]) {
        throw ParseError("point " + std::to_string(i % nn + 1) + (i >= nn ? "'" : "")
                             + " is missing",
                         text.size(), "");
      }
    }
    return Partition::from_blocks(nn, out);
  }

  NF parse_nf(std::string_view text) {
    Cursor cur(text);
    cur.expect('{');
    std::vector<std::int64_t> excluded;
    auto signed_number = [&cur] {
      if (cur.accept('-')) {
        return -cur.number();
      }
      cur.accept('+');
      return cur.number();
    };
    if (!cur.accept('}')) {
      do {
        excluded.push_back(signed_number());
      } while (cur.accept(','));
      cur.expect('}');
    }
    cur.expect(';');
    auto const c = cur.peek();
    if (c != '+' && c != '-' && !std::isdigit(static_cast<unsigned char>(c))) {
      cur.fail("a signed shift");
    }
    auto const shift = signed_number();
    if (!cur.at_end()) {
      cur.fail("end of input");
    }
    return NF(std::move(excluded), shift);
  }

  NF parse_nf_or_word(std::string_view text) {
    Cursor cur(text);
    if (cur.peek() == '{') {
      return parse_nf(text);
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != 'g' && text[i] != 'h' && text[i] != 'e') {
        throw ParseError(std::string("unexpected '") + text[i] + "'", i, "one of g, h, e");
      }
    }
    return nf_of_word(text);
  }

  std::string to_string(PartialMap const& a) {
    std::string out = "[";
    for (std::size_t x = 0; x < a.degree(); ++x) {
      if (x > 0) {
        out += ',';
      }
      out += a.defined(x) ? std::to_string(a[x] + 1) : "_";
    }
    return out + "]";
  }

  std::string to_string(Partition const& a) {
    std::size_t const n   = a.degree();
    std::string       out;
    for (auto const& b : a.blocks()) {
      out += '{';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += b[i] < n ? std::to_string(b[i] + 1) : std::to_string(b[i] - n + 1) + "'";
      }
      out += '}';
    }
    return out;
  }

  std::string to_string(NF const& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.excluded().size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(a.excluded()[i]);
    }
    out += "};";
    out += a.shift() < 0 ? "-" : "+";
    out += std::to_string(a.shift() < 0 ? -a.shift() : a.shift());
    return out;
  }

  std::string to_string(EqRel const& rel) {
    std::string out;
    for (auto const& c : rel.classes()) {
      out += '{';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += std::to_string(c[i] + 1);
      }
      out += '}';
    }
    return out;
  }

  std::string render_partition(Partition const& a) {
    std::size_t const  n = a.degree();
    std::ostringstream os;
    auto name = [n](std::size_t x) {
      return x < n ? "u" + std::to_string(x + 1) : "l" + std::to_string(x - n + 1);
    };
    auto label = [n](std::size_t x) {
      return x < n ? std::to_string(x + 1) : std::to_string(x - n + 1) + "'";
    };
    os << "graph partition {\n";
    os << "  layout=neato;\n";
    os << "  node [shape=circle];\n";
    // pinned coordinates: upper row at y=1, lower row at y=0
    for (std::size_t x = 0; x < 2 * n; ++x) {
      os << "  " << name(x) << " [label=\"" << label(x) << "\", pos=\"" << x % n << ","
         << (x < n ? 1 : 0) << "!\"];\n";
    }
    for (auto const& b : a.blocks()) {
      for (std::size_t i = 1; i < b.size(); ++i) {
        os << "  " << name(b[i - 1]) << " -- " << name(b[i]) << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace semicoh
