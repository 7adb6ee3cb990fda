#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace metagrowth {

using BigInt = mpz_class;
using Rational = mpq_class;

// Coefficient maps never store zeros; every mutation goes through this.
template <typename Key, typename Compare>
void addTerm(std::map<Key, Rational, Compare>& terms, const Key& key, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

inline std::string formatCoefficient(const Rational& c) { return c.get_str(); }

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace metagrowth
