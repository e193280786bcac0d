#include "filtreg/ring.hpp"

#include <cctype>
#include <set>

#include "filtreg/errors.hpp"

namespace filtreg {

PolyRing::PolyRing(std::uint32_t characteristic, std::vector<std::string> variables)
    : field_(characteristic), names_(std::move(variables)) {
  if (names_.empty()) throw ParseError("ring needs at least one variable");
  if (names_.size() > kMaxVars)
    throw ParseError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw ParseError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
}

Polynomial PolyRing::var(std::size_t i) const {
  return Polynomial::monomial(field_, Monomial::variable(i));
}

namespace {

class Parser {
 public:
  Parser(const PolyRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc = ring_.zero();
    bool first = true;
    for (;;) {
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a nonnegative integer");
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(s_[pos_++] - '0');
        if (e > 60000) fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(c)) {
      const PrimeField& f = ring_.field();
      Coeff v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = f.add(f.mul(v, f.from_int(10)), f.from_int(s_[pos_++] - '0'));
      return Polynomial::monomial(f, Monomial{}, v);
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = ring_.variables();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return ring_.var(i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const { return Parser(*this, text).run(); }

std::string PolyRing::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::int64_t c = field_.to_signed(t.c);
    if (c < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    if (t.m.is_one()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + '*';
      out += to_string(t.m);
    }
    first = false;
  }
  return out;
}

}  // namespace filtreg
