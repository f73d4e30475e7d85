#include "qzeta/elliptic.hpp"

#include <stdexcept>

#include "qzeta/modular.hpp"
#include "qzeta/numbers.hpp"

namespace qzeta {

namespace {

Int int_pow(long base, long e) {
  Int out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

ZetaSeries p_function(long k, long N) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  long rad = N + 2;
  ZetaSeries out(Rat(N + 1), rad, rad, Rat(1), Rat(0));
  Rat minus_one_k(k % 2 == 0 ? 1 : -1);
  for (long n = 1; n <= rad; ++n) {
    Rat np(int_pow(n, k - 1));
    QSeries inv = reciprocal_power(n, 1, N);
    if (n <= N) out.set_entry(n, (QSeries::monomial(np, n, N) * inv).truncated(N + 1));
    out.set_entry(-n, inv.scaled(np * minus_one_k));
  }
  if (k == 1) out.set_entry(0, QSeries::constant(rat(1, 2), N));
  return out;
}

ZetaSeries weierstrass_p(long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  long rad = N + 2;
  ZetaSeries out(Rat(N + 1), rad, rad, Rat(1), Rat(0));
  for (long n = 1; n <= rad; ++n) {
    QSeries inv = reciprocal_power(n, 1, N);
    if (n <= N) out.set_entry(n, (QSeries::monomial(Rat(n), n, N) * inv).truncated(N + 1));
    out.set_entry(-n, inv.scaled(Rat(n)));
  }
  out.set_entry(0, g_hat(2, N).scaled(Rat(-1)));
  return out;
}

ZetaSeries weierstrass_p_prime(long N) { return weierstrass_p(N).dz(); }

ZetaSeries j_tilde(long ell, long N) {
  if (ell < 2) throw std::invalid_argument("ell must be >= 2");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<Int> P = euler_polynomial(ell);
  long rad = N + 2;
  ZetaSeries out(Rat(N + 1), rad, rad, Rat(1), Rat(1));
  Rat sign(ell % 2 == 0 ? 1 : -1);
  for (long n = 1; n <= N; ++n) {
    // q^n P_ell(q^n) / (1-q^n)^ell
    std::vector<Rat> num(static_cast<std::size_t>(N + 1), Rat(0));
    for (std::size_t j = 0; j < P.size(); ++j) {
      long e = n * (1 + static_cast<long>(j));
      if (e <= N) num[static_cast<std::size_t>(e)] = Rat(P[j]);
    }
    QSeries f = QSeries::from_parts(0, 1, std::move(num)) * reciprocal_power(n, ell, N);
    f = f.truncated(N + 1);
    if (f.is_zero()) continue;
    out.set_entry(n, f);
    out.set_entry(-n, f.scaled(sign));
  }
  return out;
}

ZetaSeries q_block(long k, long N) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  long rad = N / k + 2;
  ZetaSeries out(Rat(N + 1), rad, rad, Rat(k), Rat(k));
  for (long n = 1; k * n <= N; ++n) {
    QSeries f = (QSeries::monomial(1, k * n, N) * reciprocal_power(n, 2 * k, N)).truncated(N + 1);
    out.set_entry(n, f);
    out.set_entry(-n, f);
  }
  return out;
}

}  // namespace qzeta
