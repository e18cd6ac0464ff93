#pragma once

#include <span>
#include <vector>

#include "idealfact/poly.hpp"

namespace idealfact::detail {

/// a - c * m * b over decreasing term lists (m multiplies every monomial of b).
inline std::vector<Term> sub_scaled(std::span<const Term> a, std::span<const Term> b, Coeff c, const Monomial& m,
                                    const FiniteField& k, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Monomial bm = b[j].mono * m;
    const int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, k.neg(k.mul(c, b[j].coeff))});
      ++j;
    } else {
      const Coeff s = k.sub(a[i].coeff, k.mul(c, b[j].coeff));
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, k.neg(k.mul(c, b[j].coeff))});
  return out;
}

}  // namespace idealfact::detail
