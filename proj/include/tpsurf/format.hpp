#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/matrix.hpp"
#include "tpsurf/xpoly.hpp"

// Text syntax: terms like `-3/2*s^2*t*u*v^3`, separated by + or -, with `*`
// optional between factors. BiPoly uses s,t,u,v; XPoly uses x0..x3.
namespace tpsurf {

namespace detail {

inline void append_term(std::string& out, const Rational& c, const std::string& mono, bool first) {
  const bool neg = c < 0;
  const Rational a = neg ? Rational(-c) : c;
  if (first)
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty()) {
    out += a.get_str();
  } else {
    if (a != 1) out += a.get_str() + "*";
    out += mono;
  }
}

inline void append_power(std::string& mono, std::string_view var, int e) {
  if (e == 0) return;
  if (!mono.empty()) mono += '*';
  mono += var;
  if (e > 1) mono += "^" + std::to_string(e);
}

struct RawTerm {
  Rational coeff;
  std::vector<int> exps;
};

/// Tokenizer shared by both polynomial flavours. Variables are matched by
/// the callback, which returns the variable index and consumes its name.
class TermParser {
 public:
  TermParser(std::string_view text, int line, int col_offset, std::size_t nvars)
      : s_(text), line_(line), col0_(col_offset), nvars_(nvars) {}

  template <class VarMatcher>
  std::vector<RawTerm> parse(VarMatcher&& match_var) {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign, match_var));
      skip_ws();
    }
    return terms;
  }

  [[noreturn]] void error(const std::string& why) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_) + 1, why);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  void advance(std::size_t n = 1) { pos_ += n; }

 private:
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  template <class VarMatcher>
  RawTerm parse_term(int sign, VarMatcher& match_var) {
    RawTerm t{Rational(sign), std::vector<int>(nvars_, 0)};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_digits();
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = parse_digits();
        if (den == 0) error("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      t.coeff *= q;
      any = true;
    }
    for (;;) {
      skip_ws();
      std::size_t save = pos_;
      if (peek() == '*') {
        if (!any) error("unexpected '*'");
        ++pos_;
        skip_ws();
      }
      const int var = match_var(*this);
      if (var < 0) {
        if (pos_ != save) error("expected a variable after '*'");
        break;
      }
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        Integer ez = parse_digits();
        if (ez > 1000) error("exponent too large");
        e = static_cast<int>(ez.get_si());
      }
      t.exps[static_cast<std::size_t>(var)] += e;
      any = true;
    }
    if (!any) error("expected a coefficient or variable");
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
  std::size_t nvars_;
};

}  // namespace detail

inline std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  const BiDeg d = f.deg();
  for (const auto& [k, c] : f.terms()) {
    const int i = BiPoly::key_i(k), j = BiPoly::key_j(k);
    std::string mono;
    detail::append_power(mono, "s", d.m - i);
    detail::append_power(mono, "t", i);
    detail::append_power(mono, "u", d.n - j);
    detail::append_power(mono, "v", j);
    detail::append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

inline std::string to_string(const XPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  static constexpr std::array<std::string_view, 4> names{"x0", "x1", "x2", "x3"};
  for (const auto& [k, c] : f.terms()) {
    std::string mono;
    for (int v = 0; v < 4; ++v) detail::append_power(mono, names[static_cast<std::size_t>(v)], exponent_of(k, v));
    detail::append_term(out, c, mono, first);
    first = false;
  }
  return out;
}

/// Parses a bihomogeneous form. `expected` fixes the bidegree (needed for "0").
inline BiPoly parse_bipoly(std::string_view text, std::optional<BiDeg> expected = std::nullopt,
                           int line = 1, int col_offset = 0) {
  detail::TermParser p(text, line, col_offset, 4);
  auto terms = p.parse([](detail::TermParser& tp) -> int {
    switch (tp.peek()) {
      case 's': tp.advance(); return 0;
      case 't': tp.advance(); return 1;
      case 'u': tp.advance(); return 2;
      case 'v': tp.advance(); return 3;
      default: return -1;
    }
  });
  std::optional<BiDeg> deg = expected;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    const BiDeg td{t.exps[0] + t.exps[1], t.exps[2] + t.exps[3]};
    if (!deg) deg = td;
    if (*deg != td)
      throw ParseError(line, col_offset + 1,
                       "not bihomogeneous: term of bidegree " + td.str() + " in a form of bidegree " +
                           deg->str());
  }
  BiPoly f(deg.value_or(BiDeg{0, 0}));
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    f += BiPoly::monomial(f.deg(), t.exps[1], t.exps[3], t.coeff);
  }
  return f;
}

/// Parses a homogeneous form in x0..x3.
inline XPoly parse_xpoly(std::string_view text, int line = 1, int col_offset = 0) {
  detail::TermParser p(text, line, col_offset, 4);
  auto terms = p.parse([](detail::TermParser& tp) -> int {
    if (tp.peek() != 'x') return -1;
    const char d = tp.peek(1);
    if (d < '0' || d > '3') tp.error("unknown variable (expected x0..x3)");
    tp.advance(2);
    return d - '0';
  });
  std::optional<int> deg;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    const int td = t.exps[0] + t.exps[1] + t.exps[2] + t.exps[3];
    if (!deg) deg = td;
    if (*deg != td) throw ParseError(line, col_offset + 1, "not homogeneous");
  }
  XPoly f(deg.value_or(0));
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    f.add_term(pack({t.exps[0], t.exps[1], t.exps[2], t.exps[3]}), t.coeff);
  }
  return f;
}

/// Row-major JSON-style array of entry strings, for debugging output.
inline std::string to_string(const MatX& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << '"' << to_string(m(r, c)) << '"';
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace tpsurf
