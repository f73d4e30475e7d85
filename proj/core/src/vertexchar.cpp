#include "qzeta/vertexchar.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "qzeta/qmzv.hpp"

namespace qzeta {

namespace {

// a + b w with w a primitive cube root of unity, so w^2 = -1 - w.
struct QOmega {
  Rat a, b;
};

QOmega operator+(const QOmega& x, const QOmega& y) { return {x.a + y.a, x.b + y.b}; }

QOmega operator*(const QOmega& x, const QOmega& y) {
  // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

QOmega inverse(const QOmega& x) {
  Rat n = x.a * x.a - x.a * x.b + x.b * x.b;  // norm, conjugate is (a-b) - b w
  if (n == 0) throw std::domain_error("inverting zero in Q[w]");
  return {(x.a - x.b) / n, -x.b / n};
}

}  // namespace

CharacterResult arakawa_char(long rank, long k, long N) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (k < 3) throw std::invalid_argument("the character formula needs level k >= 3");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  long dim = (rank + 1) * (rank + 1) - 1;
  long m = dim * k - (k - 2) * rank;
  QSeries zs = zeta_g_s(RootSystemA::make(rank), k, k - 2, N);
  CharacterResult out;
  out.series = zs * eta_series(1, N).powed(-m);
  out.eta_power = m;
  out.level = 1;
  return out;
}

ZetaSeries fm_zeta(long m, long N) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("the theta quotient is materialized for odd m >= 3 only");
  if (N < 1) throw std::invalid_argument("N must be >= 1");

  // Triple-product form of the quotient theta(mz, m tau)/theta(z, tau)^m:
  // a rational function of zeta alone times an infinite product,
  //   (1 - z^{-m})/(1 - z^{-1})^m
  //   * prod_{n>=1} (1-q^{mn}z^m)(1-q^{mn}z^{-m}) / ((1-q^n z)^m (1-q^n z^{-1})^m),
  // then the eta normalization leaves q^{(m+1)/24} (q;q)_inf (q^m;q^m)_inf
  // in front.  Everything is expanded for 1 < |z| < |q|^{-1}.

  const long J = N;  // product-part entries beyond |e| = N vanish through q^N
  std::vector<std::vector<Rat>> P(static_cast<std::size_t>(2 * J + 1),
                                  std::vector<Rat>(static_cast<std::size_t>(N + 1)));
  auto row = [&](long j) -> std::vector<Rat>& { return P[static_cast<std::size_t>(j + J)]; };
  row(0)[0] = 1;

  // C(m-1+t, t), the coefficients of (1 - u)^{-m}
  std::vector<Rat> bin(static_cast<std::size_t>(2 * N + 1));
  bin[0] = 1;
  for (long t = 1; t <= 2 * N; ++t) bin[static_cast<std::size_t>(t)] = bin[static_cast<std::size_t>(t - 1)] * rat(m - 1 + t, t);

  // denominator factors; one full descending-degree sweep per factor, so a
  // read at lower degree always sees the product before the current factor
  for (long n = 1; n <= N; ++n) {
    for (long d = N; d >= n; --d)
      for (long j = -J; j <= J; ++j) {
        Rat acc(0);
        for (long t = 1; t * n <= d && j - t >= -J; ++t) {
          long dd = d - t * n;
          if (std::labs(j - t) > dd) continue;  // below the valuation floor
          const Rat& v = row(j - t)[static_cast<std::size_t>(dd)];
          if (v != 0) acc += bin[static_cast<std::size_t>(t)] * v;
        }
        if (acc != 0) row(j)[static_cast<std::size_t>(d)] += acc;
      }
    for (long d = N; d >= n; --d)
      for (long j = -J; j <= J; ++j) {
        Rat acc(0);
        for (long t = 1; t * n <= d && j + t <= J; ++t) {
          long dd = d - t * n;
          if (std::labs(j + t) > dd) continue;
          const Rat& v = row(j + t)[static_cast<std::size_t>(dd)];
          if (v != 0) acc += bin[static_cast<std::size_t>(t)] * v;
        }
        if (acc != 0) row(j)[static_cast<std::size_t>(d)] += acc;
      }
  }
  // numerator factors (1 - q^{mn} z^{+-m}), again one sweep per factor
  for (long n = 1; m * n <= N; ++n) {
    for (long d = N; d >= m * n; --d) {
      long dd = d - m * n;
      for (long j = -J; j <= J; ++j) {
        if (j - m >= -J && std::labs(j - m) <= dd) {
          const Rat& v = row(j - m)[static_cast<std::size_t>(dd)];
          if (v != 0) row(j)[static_cast<std::size_t>(d)] -= v;
        }
      }
    }
    for (long d = N; d >= m * n; --d) {
      long dd = d - m * n;
      for (long j = -J; j <= J; ++j) {
        if (j + m <= J && std::labs(j + m) <= dd) {
          const Rat& v = row(j + m)[static_cast<std::size_t>(dd)];
          if (v != 0) row(j)[static_cast<std::size_t>(d)] -= v;
        }
      }
    }
  }

  // rational prefactor (1 - z^{-m})/(1 - z^{-1})^m = sum_{t>=0} r_t z^{-t}
  std::vector<Rat> r(static_cast<std::size_t>(2 * N + 1));
  Rat tail(1);  // C(t-1, m-1), started at t = m
  for (long t = 0; t <= 2 * N; ++t) {
    r[static_cast<std::size_t>(t)] = bin[static_cast<std::size_t>(t)];
    if (t >= m) {
      r[static_cast<std::size_t>(t)] -= tail;
      tail = tail * rat(t, t - m + 1);
    }
  }

  ZetaSeries Z(Rat(N + 1), J, J, Rat(1), Rat(0));
  for (long e = -J; e <= J; ++e) {
    std::vector<Rat> c(static_cast<std::size_t>(N + 1));
    bool any = false;
    for (long t = 0; e + t <= J; ++t) {
      if (r[static_cast<std::size_t>(t)] == 0) continue;
      const auto& src = row(e + t);
      for (long d = std::labs(e + t); d <= N; ++d)
        if (src[static_cast<std::size_t>(d)] != 0) {
          c[static_cast<std::size_t>(d)] += r[static_cast<std::size_t>(t)] * src[static_cast<std::size_t>(d)];
          any = true;
        }
    }
    if (!any) continue;
    Z.set_entry(e, QSeries::from_parts(Rat(0), 1, std::move(c)));
  }
  return Z.scaled_q(eta_series(1, N) * eta_series(m, N));
}

CharacterResult sch_u(long m, long N) {
  ZetaSeries F = fm_zeta(m, N);
  QSeries ct = F.constant_term();
  if (ct.is_zero()) throw std::logic_error("constant term of the theta quotient vanished");
  Rat lead = ct.coeff_at(ct.offset());
  CharacterResult out;
  out.series = ct.scaled(Rat(1) / lead);
  out.eta_power = 2 * m - 1;
  out.level = m;
  return out;
}

QSeries sch_u_closed(long m, long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (m == 3) {
    QSeries e2 = eisenstein(2, N);
    QSeries e2d = eisenstein(2, N).dilated(3).truncated(Rat(N + 1));
    QSeries comb = e2.scaled(rat(-1, 8)) + e2d.scaled(rat(9, 8));
    return eta_series(3, N).powed(3) * eta_series(1, N).powed(-5) * comb;
  }
  if (m == 5) {
    QSeries e2 = eisenstein(2, N);
    QSeries e2d = eisenstein(2, N).dilated(5).truncated(Rat(N + 1));
    QSeries e4 = eisenstein(4, N);
    QSeries e4d = eisenstein(4, N).dilated(5).truncated(Rat(N + 1));
    QSeries comb = (e2 * e2).scaled(rat(25, 1152)) + (e2 * e2d).scaled(rat(-125, 192)) +
                   (e2d * e2d).scaled(rat(3125, 1152)) + e4.scaled(rat(1, 576)) +
                   e4d.scaled(rat(-625, 576));
    return eta_series(5, N).powed(3) * eta_series(1, N).powed(-9) * comb;
  }
  throw std::invalid_argument("closed forms are available for m = 3 and m = 5");
}

Recognition fm_recognize(long m, long N, long margin) {
  CharacterResult sch = sch_u(m, N);
  QSeries finite = sch.series * eta_series(1, N).powed(2 * m - 1) * eta_series(m, N).powed(-3);
  return recognize(finite, qm_generators(m, N), m - 1, m - 1, margin);
}

QSeries torsion_p_third(long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const QOmega w{Rat(0), Rat(1)};
  const QOmega wp[3] = {QOmega{Rat(1), Rat(0)}, w, QOmega{Rat(-1), Rat(-1)}};

  std::vector<QOmega> acc(static_cast<std::size_t>(N + 1), QOmega{Rat(0), Rat(0)});
  // constant slice: the 1/12 of the Eisenstein part plus the Abel-summed
  // flat tail sum_{n>=1} n w^{-n} = w/(1-w)^2
  QOmega one_mw{Rat(1), Rat(-1)};
  acc[0] = QOmega{rat(1, 12), Rat(0)} + w * inverse(one_mw * one_mw);
  // remaining lattice part sum_{n,l>=1} n (w^n + w^{-n} - 2) q^{nl}
  for (long n = 1; n <= N; ++n) {
    QOmega f = wp[n % 3] + wp[(3 - n % 3) % 3] + QOmega{Rat(-2), Rat(0)};
    if (f.a == 0 && f.b == 0) continue;
    QOmega nf = QOmega{Rat(n), Rat(0)} * f;
    for (long l = 1; l * n <= N; ++l)
      acc[static_cast<std::size_t>(l * n)] = acc[static_cast<std::size_t>(l * n)] + nf;
  }

  std::vector<Rat> c(static_cast<std::size_t>(N + 1));
  for (long d = 0; d <= N; ++d) {
    if (acc[static_cast<std::size_t>(d)].b != 0)
      throw std::logic_error("torsion evaluation left an imaginary residue");
    c[static_cast<std::size_t>(d)] = acc[static_cast<std::size_t>(d)].a;
  }
  return QSeries::from_parts(Rat(0), 1, std::move(c));
}

ProbeReport conjecture_probe(const std::string& name, long rank,
                             const std::vector<long>& kvals, long N, long margin) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (kvals.empty()) throw std::invalid_argument("a probe needs at least one parameter");
  RootSystemA roots = RootSystemA::make(rank);
  long npos = static_cast<long>(roots.positive_roots.size());

  ProbeReport rep;
  rep.name = name;
  rep.rank = rank;
  rep.params = kvals;

  QSeries target;
  long level = 1;
  long wmax = 0;
  if (name == "arakawa-qm") {
    long k = kvals.front();
    if (k < 3) throw std::invalid_argument("arakawa-qm needs k >= 3");
    target = zeta_g_s(roots, k, k - 2, N);
    level = (k % 2 == 0) ? 1 : 2;  // odd k puts the support on the half-integer grid
    wmax = npos * (2 * k - 2);
  } else if (name == "zeta-g-even") {
    std::vector<long> kv = kvals;
    if (static_cast<long>(kv.size()) == 1) kv.assign(static_cast<std::size_t>(npos), kvals.front());
    for (long v : kv)
      if (v < 2 || v % 2 != 0) throw std::invalid_argument("zeta-g-even takes positive even exponents");
    target = zeta_g(roots, kv, N);
    for (long v : kv) wmax += v;
  } else if (name == "symmetrized") {
    for (long v : kvals)
      if (v < 2 || v % 2 != 0) throw std::invalid_argument("symmetrized takes positive even exponents");
    target = symmetrized_sum(roots, kvals, N);
    for (long v : kvals) wmax += v;
  } else {
    throw std::invalid_argument("unknown probe: " + name);
  }

  auto gens = qm_generators(level, N);
  try {
    Recognition rec = recognize(target, gens, 0, wmax, margin);
    rep.found = rec.found;
    if (rec.found) {
      for (auto& mono : rec.monomials) rep.labels.push_back(monomial_label(gens, mono.first));
      rep.comment = "certified on " + std::to_string(rec.verified_through - rec.fitted_up_to) +
                    " unfitted coefficient rows";
    } else {
      rep.comment = "no representation in weights 0.." + std::to_string(wmax) +
                    " at level " + std::to_string(level);
    }
    rep.recognition = std::move(rec);
  } catch (const std::invalid_argument& ex) {
    rep.found = false;
    rep.comment = ex.what();
  }
  return rep;
}

}  // namespace qzeta
