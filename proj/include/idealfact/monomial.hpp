#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace idealfact {

/// Variable slots. Bivariate rings use X and Y; T only appears in the
/// auxiliary ring used for elimination.
enum Var : int { X = 0, Y = 1, T = 2 };
inline constexpr int kMaxVars = 3;

struct Monomial {
  std::array<std::uint32_t, kMaxVars> exp{};

  static Monomial var(int v, std::uint32_t e = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(v)] = e;
    return m;
  }

  std::uint64_t degree() const { return std::uint64_t{exp[0]} + exp[1] + exp[2]; }
  bool is_one() const { return exp[0] == 0 && exp[1] == 0 && exp[2] == 0; }

  bool divides(const Monomial& o) const {
    return exp[0] <= o.exp[0] && exp[1] <= o.exp[1] && exp[2] <= o.exp[2];
  }
  /// True when the two monomials share no variable.
  bool coprime_to(const Monomial& o) const {
    return (exp[0] == 0 || o.exp[0] == 0) && (exp[1] == 0 || o.exp[1] == 0) && (exp[2] == 0 || o.exp[2] == 0);
  }

  Monomial operator*(const Monomial& o) const {
    return {{exp[0] + o.exp[0], exp[1] + o.exp[1], exp[2] + o.exp[2]}};
  }
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    return {{exp[0] - o.exp[0], exp[1] - o.exp[1], exp[2] - o.exp[2]}};
  }
  Monomial lcm(const Monomial& o) const {
    return {{std::max(exp[0], o.exp[0]), std::max(exp[1], o.exp[1]), std::max(exp[2], o.exp[2])}};
  }

  bool operator==(const Monomial&) const = default;
};

enum class OrderKind {
  Lex,
  Grevlex,
  /// T first, then grevlex on the remaining variables.
  Elimination,
};

/// A monomial order together with a variable precedence (largest first).
class MonomialOrder {
 public:
  constexpr MonomialOrder(OrderKind kind, std::array<int, kMaxVars> precedence)
      : kind_(kind), precedence_(precedence) {}

  /// Lex with y > x > t.
  static constexpr MonomialOrder lex() { return {OrderKind::Lex, {Y, X, T}}; }
  /// Grevlex with y > x > t.
  static constexpr MonomialOrder grevlex() { return {OrderKind::Grevlex, {Y, X, T}}; }
  /// T greater than every monomial in X, Y; grevlex with y > x below that.
  static constexpr MonomialOrder elimination() { return {OrderKind::Elimination, {T, Y, X}}; }

  OrderKind kind() const { return kind_; }
  const std::array<int, kMaxVars>& precedence() const { return precedence_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        for (int v : precedence_) {
          const auto i = static_cast<std::size_t>(v);
          if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::Grevlex:
        return grevlex_compare(a, b, 0);
      case OrderKind::Elimination:
        if (a.exp[T] != b.exp[T]) return a.exp[T] < b.exp[T] ? -1 : 1;
        return grevlex_compare(a, b, 1);
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  // Grevlex over precedence_[first..].
  int grevlex_compare(const Monomial& a, const Monomial& b, int first) const {
    std::uint64_t da = 0, db = 0;
    for (int k = first; k < kMaxVars; ++k) {
      const auto i = static_cast<std::size_t>(precedence_[static_cast<std::size_t>(k)]);
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int k = kMaxVars - 1; k >= first; --k) {
      const auto i = static_cast<std::size_t>(precedence_[static_cast<std::size_t>(k)]);
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
  }

  OrderKind kind_;
  std::array<int, kMaxVars> precedence_;
};

}  // namespace idealfact

template <>
struct std::hash<idealfact::Monomial> {
  std::size_t operator()(const idealfact::Monomial& m) const noexcept {
    std::size_t h = m.exp[0];
    h = h * 1000003u ^ m.exp[1];
    h = h * 1000003u ^ m.exp[2];
    return h;
  }
};
