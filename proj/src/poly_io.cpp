#include "idealfact/poly_io.hpp"

#include <cctype>

namespace idealfact {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, int nvars, const MonomialOrder& order)
      : text_(text), field_(field), nvars_(nvars), order_(order) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    MultiPoly r = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly constant(Coeff c) const { return MultiPoly::constant(field_, nvars_, order_, c); }

  MultiPoly expr() {
    MultiPoly r(field_, nvars_, order_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    r = term();
    if (negate) r = -r;
    for (;;) {
      if (accept('+'))
        r = r + term();
      else if (accept('-'))
        r = r - term();
      else
        return r;
    }
  }

  MultiPoly term() {
    MultiPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (!at_end() && text_[pos_] == '-') fail("negative exponent");
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
    std::uint64_t e = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (e > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    return base.pow(e);
  }

  MultiPoly atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint32_t p = field_->characteristic();
      std::uint64_t v = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return constant(static_cast<Coeff>(v));
    }
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view id = text_.substr(start, pos_ - start);
      if (id == "x") return MultiPoly::variable(field_, nvars_, order_, X);
      if (id == "y") return MultiPoly::variable(field_, nvars_, order_, Y);
      if (id == "t" && nvars_ == 3) return MultiPoly::variable(field_, nvars_, order_, T);
      if (id == "a" && !field_->is_prime_field()) return constant(field_->generator());
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const FieldPtr& field_;
  int nvars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, int nvars) {
  static constexpr const char* kNames[kMaxVars] = {"x", "y", "t"};
  static constexpr int kPrintOrder[kMaxVars] = {X, Y, T};
  std::string out;
  for (int v : kPrintOrder) {
    if (v >= nvars) continue;
    const std::uint32_t e = m.exp[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[v];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const FieldPtr& field, int nvars, const MonomialOrder& order) {
  return Parser(text, field, nvars, order).parse();
}

std::string coeff_to_string(const FiniteField& field, Coeff c) {
  if (field.is_prime_field()) return std::to_string(c);
  const auto d = field.digits(c);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  const FiniteField& k = *f.field();
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_text(t.mono, f.nvars());
    std::string coeff = coeff_to_string(k, t.coeff);
    if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
    if (mono.empty())
      out += coeff;
    else if (t.coeff == 1)
      out += mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

}  // namespace idealfact
