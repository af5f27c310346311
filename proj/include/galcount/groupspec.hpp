#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "galcount/constructions.hpp"
#include "galcount/group.hpp"
#include "galcount/perm.hpp"

namespace galcount {

/// Raised when a group file or paired-representation file cannot be opened.
class GroupFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip_comment_and_trim(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  auto first = std::find_if(line.begin(), line.end(), not_space);
  auto last = std::find_if(line.rbegin(), line.rend(), not_space).base();
  return first < last ? std::string(first, last) : std::string();
}

/// Reads `degree=N` / `gen=...` lines until EOF or a `---` separator.
inline PermGroup read_group_block(std::istream& is, std::size_t& lineno, bool& hit_separator) {
  std::string line;
  std::size_t degree = 0;
  std::vector<Perm> gens;
  hit_separator = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = strip_comment_and_trim(line);
    if (body.empty()) continue;
    if (body == "---") {
      hit_separator = true;
      break;
    }
    auto where = " (line " + std::to_string(lineno) + ")";
    if (body.rfind("degree=", 0) == 0) {
      if (degree != 0) throw ParseError("degree given twice" + where);
      std::string num = body.substr(7);
      try {
        std::size_t used = 0;
        long long v = std::stoll(num, &used);
        if (used != num.size() || v < 1) throw std::invalid_argument(num);
        degree = static_cast<std::size_t>(v);
      } catch (const std::logic_error&) {
        throw ParseError("degree must be a positive integer" + where);
      }
    } else if (body.rfind("gen=", 0) == 0) {
      if (degree == 0) throw ParseError("gen= before degree=" + where);
      try {
        gens.push_back(parse_cycles(body.substr(4), degree));
      } catch (const ParseError& e) {
        throw ParseError(e.what() + where);
      }
    } else {
      throw ParseError("expected 'degree=' or 'gen='" + where);
    }
  }
  if (degree == 0) throw ParseError("missing degree= line");
  if (gens.empty()) throw ParseError("no gen= lines");
  return PermGroup(degree, std::move(gens));
}

inline std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupFileError("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Group file: `degree=N` then `gen=<cycles>` lines; `#` starts a comment.
inline PermGroup read_group_file(std::istream& is) {
  std::size_t lineno = 0;
  bool sep = false;
  PermGroup g = detail::read_group_block(is, lineno, sep);
  if (sep) throw ParseError("unexpected '---' in a single group file (line " + std::to_string(lineno) + ")");
  return g;
}

inline PermGroup load_group_file(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return read_group_file(in);
}

/// Two group blocks separated by `---`, generators aligned by position.
inline DualRep read_dual_rep(std::istream& is) {
  std::size_t lineno = 0;
  bool sep = false;
  PermGroup first = detail::read_group_block(is, lineno, sep);
  if (!sep) throw ParseError("paired file needs a '---' separator");
  PermGroup second = detail::read_group_block(is, lineno, sep);
  if (sep) throw ParseError("paired file has more than two blocks");
  if (first.generators().size() != second.generators().size())
    throw InconsistentRepresentation("generator counts differ: " + std::to_string(first.generators().size()) +
                                     " vs " + std::to_string(second.generators().size()));
  return {first.generators(), second.generators()};
}

inline DualRep load_dual_rep(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return read_dual_rep(in);
}

inline void write_group_file(std::ostream& os, const PermGroup& g) {
  os << "degree=" << g.degree() << '\n';
  for (const auto& gen : g.generators()) os << "gen=" << gen.to_string() << '\n';
}

/**
 * Parses a construction expression:
 *
 *   natural(C n) | natural(A n) | natural(S n) | natural(D n) | trivial()
 *   | C n | A n | S n | D n            (shorthand for natural(...))
 *   | regular(E) | wreath(E, E) | product(E, E) | cosets(E, "gen;gen;...")
 *   | sl2(p) | heis3() | file(PATH)
 *
 * Whitespace outside the quoted generator list is ignored.
 */
class GroupSpecParser {
 public:
  explicit GroupSpecParser(std::string_view text, std::size_t cap = kDefaultCap) : text_(text), cap_(cap) {}

  PermGroup parse() {
    PermGroup g = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  PermGroup natural_family(const std::string& family) {
    std::uint64_t n = number();
    if (n == 0) fail("degree must be positive");
    if (family == "C") return natural_cyclic(n);
    if (family == "A") return natural_alternating(n);
    if (family == "S") return natural_symmetric(n);
    if (family == "D") return natural_dihedral(n);
    fail("unknown family '" + family + "'");
  }

  PermGroup expr() {
    std::string name = identifier();
    skip_ws();
    // bare "C 4" abbreviates natural(C 4)
    if (name.size() == 1 && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return natural_family(name);
    expect('(');
    if (name == "natural") {
      std::string family = identifier();
      PermGroup g = natural_family(family);
      expect(')');
      return g;
    }
    if (name == "trivial") {
      expect(')');
      return trivial_group();
    }
    if (name == "regular") {
      PermGroup g = expr();
      expect(')');
      return regular_rep(g, cap_);
    }
    if (name == "wreath" || name == "product") {
      PermGroup a = expr();
      expect(',');
      PermGroup b = expr();
      expect(')');
      return name == "wreath" ? wreath(a, b, cap_) : direct_product(a, b);
    }
    if (name == "cosets") {
      PermGroup g = expr();
      expect(',');
      expect('"');
      std::size_t close = text_.find('"', pos_);
      if (close == std::string_view::npos) fail("unterminated generator list");
      std::string_view list = text_.substr(pos_, close - pos_);
      pos_ = close + 1;
      expect(')');
      std::vector<Perm> sub;
      std::size_t start = 0;
      for (;;) {
        auto semi = list.find(';', start);
        auto item = list.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        if (item.find_first_not_of(" \t") != std::string_view::npos) sub.push_back(parse_cycles(item, g.degree()));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
      auto act = coset_action(g, sub, cap_);
      if (!act.faithful) fail("coset action is not faithful");
      return act.group;
    }
    if (name == "sl2") {
      std::uint64_t p = number();
      expect(')');
      return sl2_natural(p);
    }
    if (name == "heis3") {
      expect(')');
      return heisenberg_mod3();
    }
    if (name == "file") {
      skip_ws();
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated file(...)");
      std::string path(text_.substr(pos_, close - pos_));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      pos_ = close + 1;
      return load_group_file(path);
    }
    fail("unknown construction '" + name + "'");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

inline PermGroup parse_group_spec(std::string_view text, std::size_t cap = kDefaultCap) {
  return GroupSpecParser(text, cap).parse();
}

}  // namespace galcount
