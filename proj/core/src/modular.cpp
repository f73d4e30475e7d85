#include "qzeta/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qzeta/numbers.hpp"

namespace qzeta {

QSeries eisenstein(long two_k, long N) {
  if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<Rat> c(static_cast<std::size_t>(N + 1), Rat(0));
  c[0] = 1;
  Rat factor = Rat(-2 * two_k) / bernoulli(two_k);
  for (long n = 1; n <= N; ++n) {
    Int np = 1;
    for (long rep = 0; rep < two_k - 1; ++rep) np *= n;
    for (long j = n; j <= N; j += n) c[static_cast<std::size_t>(j)] += factor * Rat(np);
  }
  return QSeries::from_parts(0, 1, std::move(c));
}

QSeries g_hat(long two_k, long N) {
  Rat scale = -bernoulli(two_k);
  for (long i = 1; i <= two_k; ++i) scale /= i;
  return eisenstein(two_k, N).scaled(scale);
}

namespace {

// sum_{n in Z} q^{n^2/2} through q^N on the doubled grid
QSeries theta3(long N) {
  std::vector<Rat> c(static_cast<std::size_t>(2 * N + 1), Rat(0));
  for (long n = -2 * N - 2; n <= 2 * N + 2; ++n) {
    if (n * n > 2 * N) continue;
    c[static_cast<std::size_t>(n * n)] += 1;
  }
  return QSeries::from_parts(0, 2, std::move(c));
}

// sum_{n in Z} q^{(n+1/2)^2/2} = q^{1/8} sum_{n in Z} q^{n(n+1)/2}
QSeries theta2(long N) {
  std::vector<Rat> c(static_cast<std::size_t>(N + 1), Rat(0));
  for (long n = -2 * N - 2; n <= 2 * N + 2; ++n) {
    long tri = n * (n + 1) / 2;
    if (tri > N) continue;
    c[static_cast<std::size_t>(tri)] += 1;
  }
  return QSeries::from_parts(rat(1, 8), 1, std::move(c));
}

}  // namespace

QSeries theta2_pow4(long N) { return theta2(N).powed(4); }

QSeries theta3_pow4(long N) { return theta3(N).powed(4); }

std::vector<WeightedGenerator> qm_generators(long level, long N) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  std::vector<WeightedGenerator> out;
  if (level == 2) {
    out.push_back({eisenstein(2, N), 2, "E2"});
    out.push_back({theta2_pow4(N), 2, "Th2"});
    out.push_back({theta3_pow4(N), 2, "Th3"});
    return out;
  }
  out.push_back({eisenstein(2, N), 2, "E2"});
  out.push_back({eisenstein(4, N), 4, "E4"});
  out.push_back({eisenstein(6, N), 6, "E6"});
  if (level >= 3) {
    long inner = N / level + 1;
    std::string suffix = "(" + std::to_string(level) + "t)";
    out.push_back({eisenstein(2, inner).dilated(level).truncated(N + 1), 2, "E2" + suffix});
    out.push_back({eisenstein(4, inner).dilated(level).truncated(N + 1), 4, "E4" + suffix});
    out.push_back({eisenstein(6, inner).dilated(level).truncated(N + 1), 6, "E6" + suffix});
  }
  return out;
}

namespace {

void monomials_by_weight(const std::vector<WeightedGenerator>& gens, long wmin, long wmax,
                         std::vector<std::vector<long>>& out) {
  std::vector<long> expv(gens.size(), 0);
  struct Rec {
    const std::vector<WeightedGenerator>& gens;
    long wmin, wmax;
    std::vector<std::vector<long>>& out;
    void go(std::vector<long>& e, std::size_t i, long w) {
      if (i == e.size()) {
        if (w >= wmin) out.push_back(e);
        return;
      }
      for (long k = 0;; ++k) {
        long nw = w + k * gens[i].weight;
        if (nw > wmax) break;
        e[i] = k;
        go(e, i + 1, nw);
        if (gens[i].weight == 0) break;  // defensive: no infinite loop
      }
      e[i] = 0;
    }
  } rec{gens, wmin, wmax, out};
  rec.go(expv, 0, 0);
  std::stable_sort(out.begin(), out.end(), [&](const std::vector<long>& a,
                                               const std::vector<long>& b) {
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      wa += a[i] * gens[i].weight;
      wb += b[i] * gens[i].weight;
    }
    if (wa != wb) return wa < wb;
    return a < b;
  });
}

}  // namespace

Recognition recognize(const QSeries& target, const std::vector<WeightedGenerator>& gens,
                      long weight_min, long weight_max, long margin) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  if (weight_min < 0 || weight_max < weight_min) throw std::invalid_argument("bad weight range");
  if (margin < 1) throw std::invalid_argument("margin must be >= 1");
  for (auto& g : gens)
    if (g.weight <= 0) throw std::invalid_argument("generator weights must be positive");

  std::vector<std::vector<long>> expvs;
  monomials_by_weight(gens, weight_min, weight_max, expvs);
  if (expvs.empty()) throw std::invalid_argument("weight range admits no monomials");
  const std::size_t M = expvs.size();

  std::vector<QSeries> mono;
  mono.reserve(M);
  long cover = to_long(rat_ceil(target.bound())) + 1;
  for (auto& e : expvs) {
    QSeries s = QSeries::constant(1, cover);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (e[i] > 0) s = s * gens[i].series.powed(e[i]);
    mono.push_back(std::move(s));
  }

  // common coefficient grid
  Rat B = target.bound();
  long L = target.scale();
  Rat h = target.offset();
  for (auto& s : mono) {
    if (s.bound() < B) B = s.bound();
    L = std::lcm(L, s.scale());
    L = std::lcm(L, to_long(s.offset().get_den()));
  }
  L = std::lcm(L, to_long(target.offset().get_den()));
  for (auto& s : mono)
    if (!s.is_zero() && s.offset() < h) h = s.offset();

  // coefficient rows, skipping positions where everything vanishes
  std::vector<std::vector<Rat>> rows;  // M monomial values then the target value
  for (Int j = rat_ceil(h * L);; ++j) {
    Rat e = Rat(j) / L;
    if (!(e < B)) break;
    std::vector<Rat> row(M + 1);
    bool live = false;
    for (std::size_t m = 0; m < M; ++m) {
      row[m] = mono[m].coeff_at(e);
      if (row[m] != 0) live = true;
    }
    row[M] = target.coeff_at(e);
    if (row[M] != 0) live = true;
    if (live) rows.push_back(std::move(row));
  }

  Recognition out;

  // incremental exact elimination: a row either pins a new pivot or reduces
  // to zero against the basis, in which case its value column is a
  // prediction that must check out.  Dilated generators are constant below
  // q^level, so the leading rows can be degenerate; growing the fit set
  // until the system is determined handles that without ever guessing.
  std::vector<std::vector<Rat>> basis;
  std::vector<std::size_t> pivot_col;
  long last_pivot_row = -1;
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    std::vector<Rat> r = rows[ri];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (r[pivot_col[b]] == 0) continue;
      Rat f = r[pivot_col[b]];
      for (std::size_t c2 = 0; c2 <= M; ++c2) r[c2] -= f * basis[b][c2];
    }
    std::size_t pc = 0;
    while (pc < M && r[pc] == 0) ++pc;
    if (pc == M) {
      if (r[M] != 0) {
        out.fitted_up_to = last_pivot_row + 1;
        out.verified_through = 0;
        return out;  // provably outside the scanned weight range
      }
      continue;
    }
    Rat inv = Rat(1) / r[pc];
    for (auto& v : r) v *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][pc] == 0) continue;
      Rat f = basis[b][pc];
      for (std::size_t c2 = 0; c2 <= M; ++c2) basis[b][c2] -= f * r[c2];
    }
    basis.push_back(std::move(r));
    pivot_col.push_back(pc);
    last_pivot_row = static_cast<long>(ri);
  }
  out.fitted_up_to = last_pivot_row + 1;
  out.verified_through = static_cast<long>(rows.size());

  if (static_cast<long>(rows.size()) - out.fitted_up_to < margin)
    throw std::invalid_argument("target not known far enough to certify a fit at this margin");

  // free columns stay zero; every processed row is satisfied exactly
  std::vector<Rat> c(M, Rat(0));
  for (std::size_t b = 0; b < basis.size(); ++b) c[pivot_col[b]] = basis[b][M];

  out.found = true;
  for (std::size_t m = 0; m < M; ++m)
    if (c[m] != 0) out.monomials.emplace_back(expvs[m], c[m]);
  return out;
}

std::string monomial_label(const std::vector<WeightedGenerator>& gens,
                           const std::vector<long>& exponents) {
  std::string out;
  for (std::size_t i = 0; i < gens.size() && i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i].label + "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace qzeta
