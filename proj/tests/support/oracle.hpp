#pragma once

// Slow reference implementations used only to cross-check the library.

#include "sullivan/algebra.hpp"

#include <map>
#include <vector>

namespace testsupport {

using namespace sullivan;

// Bubble-sorts a generator word, flipping the sign on every swap of two odd
// generators. Returns sign 0 for a repeated odd generator.
inline std::pair<int, std::vector<GenIndex>> bubble_canonical(const Signature& sig, std::vector<GenIndex> w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        if (sig.is_odd(w[j]) && sig.is_odd(w[j + 1])) sign = -sign;
        std::swap(w[j], w[j + 1]);
      }
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1] && sig.is_odd(w[j])) return {0, {}};
  return {sign, w};
}

inline Monomial from_word(const std::vector<GenIndex>& sorted) {
  std::vector<Monomial::Factor> f;
  for (GenIndex g : sorted) {
    if (!f.empty() && f.back().gen == g)
      ++f.back().exp;
    else
      f.push_back({g, 1});
  }
  return Monomial::from_factors(f);
}

// Product by concatenating words and bubble sorting.
inline Element naive_mul(const Element& a, const Element& b) {
  SignaturePtr sp = a.signature() ? a.signature() : b.signature();
  Element r(sp);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto w = ma.word();
      auto wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      auto [s, sorted] = bubble_canonical(*sp, w);
      if (s == 0) continue;
      r.add_term(from_word(sorted), ca * cb * s);
    }
  return r;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testsupport
