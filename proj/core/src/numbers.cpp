#include "qzeta/numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace qzeta {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat bernoulli(long k) {
  if (k < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1.
  while (static_cast<long>(cache.size()) <= k) {
    long m = static_cast<long>(cache.size());
    Rat acc(0);
    for (long j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * cache[j];
    Rat b = -acc / Rat(binomial(m + 1, m));
    cache.push_back(b);
  }
  return cache[k];
}

std::vector<Int> euler_polynomial(long m) {
  if (m < 2) throw std::invalid_argument("euler_polynomial requires m >= 2");
  // a_j = sum_{i=0}^{j} (-1)^i C(m,i) (j+1-i)^{m-1}, j = 0..m-2.
  std::vector<Int> a(static_cast<size_t>(m - 1));
  for (long j = 0; j <= m - 2; ++j) {
    Int acc(0);
    for (long i = 0; i <= j; ++i) {
      Int p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j + 1 - i),
                    static_cast<unsigned long>(m - 1));
      Int term = binomial(m, i) * p;
      if (i % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    a[static_cast<size_t>(j)] = acc;
  }
  return a;
}

}  // namespace qzeta
