#include "qzeta/checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qzeta/biseries.hpp"
#include "qzeta/elliptic.hpp"
#include "qzeta/graph.hpp"
#include "qzeta/graph_series.hpp"
#include "qzeta/modular.hpp"
#include "qzeta/numbers.hpp"
#include "qzeta/qmzv.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/vertexchar.hpp"

namespace qzeta {

CheckResult check_compare(std::string id, std::string statement, const QSeries& lhs,
                          const QSeries& rhs) {
  CheckResult out{std::move(id), std::move(statement), false, {}};
  try {
    Rat through = std::min(lhs.bound(), rhs.bound());
    if (QSeries::agree(lhs, rhs, through)) {
      out.pass = true;
      return out;
    }
    QSeries d = lhs - rhs;
    Rat e = d.offset();
    std::ostringstream os;
    os << "first difference at q^" << e << ": lhs " << lhs.coeff_at(e) << ", rhs "
       << rhs.coeff_at(e);
    out.detail = os.str();
  } catch (const std::exception& ex) {
    out.detail = ex.what();
  }
  return out;
}

namespace {

constexpr auto compare = &check_compare;

CheckResult claim(std::string id, std::string statement, bool ok, std::string note = {}) {
  return CheckResult{std::move(id), std::move(statement), ok,
                     ok ? std::string{} : std::move(note)};
}

// sum_{n>=1} c_n q^n/(1-q^n) on the integer grid through q^N
QSeries lambert(const std::vector<Rat>& c, long N) {
  std::vector<Rat> out(static_cast<std::size_t>(N) + 1);
  for (long n = 1; n <= N; ++n) {
    if (n >= static_cast<long>(c.size()) || c[static_cast<std::size_t>(n)] == 0) continue;
    for (long e = n; e <= N; e += n) out[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(n)];
  }
  return QSeries::from_parts(0, 1, std::move(out));
}

QSeries binomial_lambert(long k, long N, bool weight_by_n) {
  std::vector<Rat> c(static_cast<std::size_t>(N) + 1);
  for (long n = 1; n <= N; ++n) {
    Rat v(binomial(n + k - 2, k - 1));
    if (weight_by_n) v *= n;
    c[static_cast<std::size_t>(n)] = v;
  }
  return lambert(c, N);
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::vector<CheckResult> check_graph_identities(const CheckOptions& opts) {
  const long N = std::max<long>(opts.order, 8);
  const long kmax = std::max<long>(opts.kmax, 1);
  std::vector<CheckResult> out;

  QSeries qinv = QSeries::monomial(1, -1, N);
  QSeries q1 = QSeries::monomial(1, 1, N);

  {
    QSeries lhs = graph_series(build_basic(BasicKind::cycle, 5), N);
    QSeries rhs = qinv * binomial_lambert(1, N, true) * euler_product(N).powed(-2);
    out.push_back(compare("c5-closed", "H(C5) = q^-1 [sum n q^n/(1-q^n)] / (q)^2", lhs, rhs));
  }
  {
    QSeries lhs = graph_series(build_T(2), N);
    QSeries rhs = qinv * zq_star({2}, N) * euler_product(N).powed(-3);
    out.push_back(
        compare("t6-closed", "H(T6) = q^-1 [sum q^n/(1-q^n)^2] / (q)^3", lhs, rhs));
  }
  {
    Graph pt = build_basic(BasicKind::point, 1);
    QSeries lhs = graph_series(disjoint_union(build_basic(BasicKind::cycle, 5), pt), N);
    out.push_back(compare("c5-pt-t6", "H(C5 + pt) = H(T6)", lhs, graph_series(build_T(2), N)));
  }

  for (long k = 1; k <= kmax; ++k) {
    QSeries lhs = graph_series(build_gamma(k), N);
    QSeries rhs = qinv * binomial_lambert(k, N, true) * euler_product(N).powed(-(k + 1));
    out.push_back(compare("gamma-closed-k" + std::to_string(k),
                          "H(Gamma_" + std::to_string(3 * k + 2) +
                              ") = q^-1 [sum n C(n+k-2,k-1) q^n/(1-q^n)] / (q)^{k+1}",
                          lhs, rhs));
  }

  for (long k = 1; k <= kmax; ++k) {
    // the numerator is q d/dq log of the k+1 dimensional partition product
    QSeries prod = QSeries::constant(1, N);
    for (long n = 1; n <= N; ++n)
      prod = prod * reciprocal_power(n, rat_to_long(Rat(binomial(n + k - 2, k - 1))), N);
    out.push_back(compare("macmahon-logderiv-k" + std::to_string(k),
                          "q M' = M sum n C(n+k-2,k-1) q^n/(1-q^n) for the "
                          "(k+1)-dimensional partition product M",
                          prod.q_derived(), prod * binomial_lambert(k, N, true)));
  }

  for (long k = 2; k <= std::max<long>(kmax, 2); ++k) {
    QSeries lhs = graph_series(build_T(k), N);
    QSeries rhs = qinv * zq_star({k}, N) * euler_product(N).powed(-(k + 1));
    out.push_back(compare("t-closed-k" + std::to_string(k),
                          "H(T_" + std::to_string(2 * k + 2) + ") = q^-1 z*(k) / (q)^{k+1}",
                          lhs, rhs));
  }

  for (long k = 1; k <= kmax; ++k)
    out.push_back(compare("zq-binomial-k" + std::to_string(k),
                          "sum q^n/(1-q^n)^k = sum C(n+k-2,k-1) q^n/(1-q^n)",
                          zq_star({k}, N), binomial_lambert(k, N, false)));

  for (long k = 1; k <= kmax; ++k) {
    Graph pt = build_basic(BasicKind::point, 1);
    QSeries lhs = graph_series(disjoint_union(build_gamma(k), pt), N);
    QSeries rhs = graph_series(build_T(k + 1), N).scaled(k);
    if (k >= 2)
      rhs = rhs - graph_series(disjoint_union(build_T(k), pt), N).scaled(k - 1);
    out.push_back(compare("gamma-t-bridge-k" + std::to_string(k),
                          "H(Gamma_{3k+2} + pt) = k H(T_{2k+4}) - (k-1) H(T_{2k+2} + pt)",
                          lhs, rhs));
  }

  {
    std::vector<std::vector<long>> comps = {{2}, {1, 2}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 2}};
    for (const auto& a : comps) {
      long total = static_cast<long>(a.size());
      for (long ai : a) total += ai;
      QSeries lhs =
          q1 * graph_series(build_Z(a), N) * euler_product(N).powed(total);
      out.push_back(compare("z-graph-" + join_longs(a),
                            "q H(Z_a) (q)^{k+|a|} = z*(a), a = (" + join_longs(a) + ")", lhs,
                            zq_star(a, N)));
    }
  }

  for (long k = 1; k <= std::min<long>(kmax, 3); ++k)
    out.push_back(compare("gamma-multisum-k" + std::to_string(k),
                          "the (k+1)-fold multisum form of H(Gamma_{3k+2})",
                          gamma_multisum(k, N), graph_series(build_gamma(k), N)));

  {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {0, 1}, {1, 2}, {2, 2}}) {
      std::vector<QSeries> inv;
      for (long m = 0; m * (std::min(a, b) + 1) <= N; ++m)
        inv.push_back(pochhammer(m, N).inverted());
      QSeries lhs = QSeries::zero_through(N + 1);
      for (long m = 0; m * (a + 1) <= N; ++m)
        for (long n = 0; m * n + m * (a + 1) + n * (b + 1) <= N; ++n) {
          long e = m * n + m * (a + 1) + n * (b + 1);
          lhs = lhs + QSeries::monomial(1, e, N) * inv[static_cast<std::size_t>(m)] *
                          inv[static_cast<std::size_t>(n)];
        }
      QSeries rhs =
          (pochhammer_shifted(b + 1, a + 1, N) * euler_product_shifted(a + 1, N)).inverted();
      out.push_back(compare("double-sum-a" + std::to_string(a) + "b" + std::to_string(b),
                            "sum_{m,n} q^{mn+m(a+1)+n(b+1)}/((q)_m (q)_n) = "
                            "1/((q^{b+1})_{a+1} (q^{a+1})_inf)",
                            lhs, rhs));
    }
  }

  {
    // bivariate refinement: sum q^{n1} x^{nk} / prod (1-q^{ni}) over
    // nonincreasing tuples equals the same sum with the x attached to the
    // outer geometric factor
    const long D = 8;
    const long Nq = std::min<long>(N, 16);
    for (long k = 2; k <= 3; ++k) {
      std::vector<QSeries> lslice(D + 1, QSeries::zero_through(Nq + 1));
      std::vector<QSeries> rslice(D + 1, QSeries::zero_through(Nq + 1));
      std::vector<long> n(static_cast<std::size_t>(k), 1);
      // odometer over nonincreasing tuples with n1 <= Nq
      while (true) {
        QSeries tail = QSeries::constant(1, Nq);
        for (long i = 1; i < k; ++i)
          tail = tail * reciprocal_power(n[static_cast<std::size_t>(i)], 1, Nq);
        if (n.back() <= D)
          lslice[static_cast<std::size_t>(n.back())] =
              lslice[static_cast<std::size_t>(n.back())] +
              QSeries::monomial(1, n[0], Nq) * tail * reciprocal_power(n[0], 1, Nq);
        for (long l = 1; l <= D && l * n[0] <= Nq; ++l)
          rslice[static_cast<std::size_t>(l)] =
              rslice[static_cast<std::size_t>(l)] + QSeries::monomial(1, l * n[0], Nq) * tail;
        long i = k - 1;
        while (i >= 0) {
          ++n[static_cast<std::size_t>(i)];
          bool ok = n[0] <= Nq;
          for (long j = 1; j <= i; ++j)
            ok = ok && n[static_cast<std::size_t>(j)] <= n[static_cast<std::size_t>(j - 1)];
          if (ok) {
            for (long j = i + 1; j < k; ++j) n[static_cast<std::size_t>(j)] = 1;
            break;
          }
          --i;
        }
        if (i < 0) break;
      }
      BiSeries lhs(D, Rat(Nq + 1)), rhs(D, Rat(Nq + 1));
      for (long j = 0; j <= D; ++j) {
        lhs.set_slice(j, lslice[static_cast<std::size_t>(j)]);
        rhs.set_slice(j, rslice[static_cast<std::size_t>(j)]);
      }
      bool ok = BiSeries::agree(lhs, rhs, Rat(Nq));
      out.push_back(claim("x-refined-zeta-k" + std::to_string(k),
                          "sum q^{n1} x^{nk}/prod(1-q^{ni}) = sum x q^{n1}/"
                          "((1-x q^{n1}) prod_{i>1}(1-q^{ni})), depth " +
                              std::to_string(k),
                          ok, "bivariate slices differ"));

      // d/dx at x=1: the nk-weighted sum collapses to z*(2,1,..,1)
      QSeries deriv = QSeries::zero_through(Nq + 1);
      std::fill(n.begin(), n.end(), 1l);
      while (true) {
        QSeries term = QSeries::monomial(n.back(), n[0], Nq);
        for (long i = 0; i < k; ++i)
          term = term * reciprocal_power(n[static_cast<std::size_t>(i)], 1, Nq);
        deriv = deriv + term;
        long i = k - 1;
        while (i >= 0) {
          ++n[static_cast<std::size_t>(i)];
          bool okc = n[0] <= Nq;
          for (long j = 1; j <= i; ++j)
            okc = okc && n[static_cast<std::size_t>(j)] <= n[static_cast<std::size_t>(j - 1)];
          if (okc) {
            for (long j = i + 1; j < k; ++j) n[static_cast<std::size_t>(j)] = 1;
            break;
          }
          --i;
        }
        if (i < 0) break;
      }
      std::vector<long> hook = {2};
      for (long i = 1; i < k; ++i) hook.push_back(1);
      out.push_back(compare("nk-derivative-k" + std::to_string(k),
                            "sum nk q^{n1}/prod(1-q^{ni}) = z*(2,1,..,1), depth " +
                                std::to_string(k),
                            deriv, zq_star(hook, Nq)));
    }
  }

  {
    bool ok = true;
    std::string note;
    for (long k = 1; k <= std::min<long>(kmax, 5); ++k)
      if (!(hilbert_series(build_gamma(k)) == hilbert_gamma_closed(k))) {
        ok = false;
        note = "k = " + std::to_string(k);
        break;
      }
    out.push_back(claim("hilbert-gamma-closed",
                        "H_t(R_{Gamma_{3k+2}}) = (1+t)^{k-1}(1+(2+k)t+t^2)/(1-t)^{k+1}", ok,
                        note));
  }
  {
    HilbertRF c5 = hilbert_series(build_basic(BasicKind::cycle, 5));
    HilbertRF t6 = hilbert_series(build_T(2));
    bool ok = c5.numerator == std::vector<Int>{1, 3, 1} && c5.pole_order == 2 &&
              t6.numerator == c5.numerator && t6.pole_order == 3;
    out.push_back(claim("hilbert-c5-t6",
                        "H_t(R_C5) = (1+3t+t^2)/(1-t)^2 and H_t(R_T6) picks up one more "
                        "pole with the same numerator",
                        ok, hilbert_to_string(c5) + " vs " + hilbert_to_string(t6)));
  }
  {
    bool ok = true;
    std::string note;
    for (const Graph& g : {build_basic(BasicKind::cycle, 5), build_T(2), build_gamma(2),
                           build_basic(BasicKind::path, 4)})
      if (hilbert_via_ct(g, 6) != hilbert_expand(hilbert_series(g), 6)) {
        ok = false;
        note = "a lattice expansion disagrees with the face-ring form";
        break;
      }
    out.push_back(claim("hilbert-ct",
                        "the graded walk of the graph series lattice reproduces the "
                        "edge-algebra Hilbert series through t^6",
                        ok, note));
  }
  {
    bool ok = true;
    std::string note;
    for (long k = 1; k <= std::min<long>(kmax + 2, 6); ++k) {
      Graph g = build_gamma(k);
      long edges_want = 5 * k + (k - 2) * (k - 1) / 2;
      Int det_want = Int(k + 1) * ((k % 2 == 1) ? 1 : -1);
      long mindeg = g.n();
      for (long v = 0; v < g.n(); ++v) mindeg = std::min(mindeg, g.degree(v));
      if (g.edge_count() != edges_want || adjacency_determinant(g) != det_want || mindeg < 2) {
        ok = false;
        note = "k = " + std::to_string(k);
        break;
      }
    }
    out.push_back(claim("gamma-structure",
                        "Gamma_{3k+2} is leafless with 5k+(k-2)(k-1)/2 edges and adjacency "
                        "determinant (-1)^{k+1}(k+1)",
                        ok, note));
  }
  {
    bool ok = true;
    for (long k = 2; k <= kmax + 1; ++k) ok = ok && is_bipartite(build_T(k));
    for (const auto& a : std::vector<std::vector<long>>{{2}, {2, 1}, {1, 1, 2}})
      ok = ok && is_bipartite(build_Z(a));
    out.push_back(claim("bipartite-families",
                        "the spider trees and matched star stacks are bipartite", ok));
  }

  return out;
}

std::vector<CheckResult> check_zeta_identities(const CheckOptions& opts) {
  const long N = std::max<long>(opts.order, 10);
  const long kmax = std::max<long>(opts.kmax, 1);
  std::vector<CheckResult> out;

  for (auto [a1, a2] : std::vector<std::pair<long, long>>{{2, 1}, {1, 1}, {3, 4}})
    out.push_back(compare("stuffle-" + std::to_string(a1) + std::to_string(a2),
                          "z*(a1,a2) = z(a1,a2) + z(a1+a2)", zq_star({a1, a2}, N),
                          zq_strict({a1, a2}, N) + zq_strict({a1 + a2}, N)));

  for (long k = 1; k <= std::min<long>(kmax + 2, 6); ++k) {
    std::vector<long> hook = {2};
    for (long i = 1; i < k; ++i) hook.push_back(1);
    QSeries lhs = zq_star(hook, N);
    QSeries rhs = zq_star({k + 1}, N).scaled(k) - zq_star({k}, N).scaled(k - 1);
    out.push_back(compare("cyclic-hook-k" + std::to_string(k),
                          "z*(2,1,..,1) = k z*(k+1) - (k-1) z*(k), depth k", lhs, rhs));
    out.push_back(compare("cyclic-single-k" + std::to_string(k),
                          "z*(2,1,..,1) = sum n C(n+k-2,k-1) q^n/(1-q^n)", lhs,
                          binomial_lambert(k, N, true)));
  }

  out.push_back(compare("sl3-outer", "zeta_sl3(2,3,4) = zeta_sl3(4,3,2)",
                        zeta_g(RootSystemA::make(2), {2, 3, 4}, N),
                        zeta_g(RootSystemA::make(2), {4, 3, 2}, N)));

  {
    QSeries E2 = eisenstein(2, N), E4 = eisenstein(4, N), E6 = eisenstein(6, N);
    out.push_back(compare("ramanujan-e2", "q E2' = (E2^2 - E4)/12", E2.q_derived(),
                          (E2 * E2 - E4).scaled(rat(1, 12))));
    out.push_back(compare("ramanujan-e4", "q E4' = (E2 E4 - E6)/3", E4.q_derived(),
                          (E2 * E4 - E6).scaled(rat(1, 3))));
    out.push_back(compare("ramanujan-e6", "q E6' = (E2 E6 - E4^2)/2", E6.q_derived(),
                          (E2 * E6 - E4 * E4).scaled(rat(1, 2))));
    out.push_back(compare("eisenstein-e8", "E4^2 = E8", E4 * E4, eisenstein(8, N)));
    out.push_back(compare("eisenstein-e10", "E4 E6 = E10", E4 * E6, eisenstein(10, N)));
  }

  {
    ZetaSeries wp = weierstrass_p(N);
    out.push_back(compare("wp-ct", "CT(wp) = -G^_2", ct_product({wp}, Rat(N)),
                          g_hat(2, N).scaled(-1)));
    out.push_back(compare("wp-ct-square", "CT(wp^2) = 5 G^_4 = E4/144",
                          ct_product({wp, wp}, Rat(N + 1)),
                          eisenstein(4, N).scaled(rat(1, 144))));
    ZetaSeries wpp = weierstrass_p_prime(N);
    bool odd = ct_product({wpp}, Rat(N)).is_zero() &&
               ct_product({wpp, wpp, wpp}, Rat(std::min<long>(N, 20))).is_zero();
    out.push_back(claim("wp-prime-odd", "odd powers of wp' have vanishing constant term",
                        odd, "a constant term survived"));
  }

  {
    ZetaSeries lhs = q_block(3, N);
    ZetaSeries rhs = j_tilde(6, N).scaled(rat(1, 120)) + j_tilde(4, N).scaled(rat(-1, 24)) +
                     j_tilde(2, N).scaled(rat(1, 30));
    bool ok = true;
    std::string note;
    for (long e = -lhs.rad_neg(); e <= lhs.rad_pos() && ok; ++e)
      if (!QSeries::agree(lhs.entry(e), rhs.entry(e), Rat(N + 1))) {
        ok = false;
        note = "entry z^" + std::to_string(e);
      }
    out.push_back(claim("qblock-jtilde",
                        "the k=3 propagator block is (1/120) J~_6 - (1/24) J~_4 + (1/30) J~_2",
                        ok, note));
  }

  for (long k = 1; k <= 2; ++k) {
    ZetaSeries b = q_block(k, N);
    out.push_back(compare("cubic-ct-k" + std::to_string(k),
                          "CT(block_k^3) = 6 zeta_sl3(2k,2k,2k)", ct_product({b, b, b}, Rat(N)),
                          zeta_g(RootSystemA::make(2), {2 * k, 2 * k, 2 * k}, N).scaled(6)));
  }

  {
    QSeries E2 = eisenstein(2, N), E4 = eisenstein(4, N), E6 = eisenstein(6, N);
    QSeries combo = (E6 * E6).scaled(rat(1, 570240)) + (E4 * E4 * E4).scaled(rat(1, 798336)) -
                    (E2 * E4 * E6).scaled(rat(1, 332640));
    out.push_back(compare("sl3-weight12",
                          "zeta_sl3 with cubed dimension factor = 8 [E6^2/570240 + "
                          "E4^3/798336 - E2 E4 E6/332640]",
                          zeta_g_s(RootSystemA::make(2), 3, 1, N), combo.scaled(8)));
    out.push_back(compare("sl2-weight6", "sum n^4 q^n/(1-q^n)^2 = (E2 E4 - E6)/720",
                          zeta_g_s(RootSystemA::make(1), 4, 2, N),
                          (E2 * E4 - E6).scaled(rat(1, 720))));
  }

  out.push_back(compare("bibracket-collapse",
                        "equal interval data (k, s) = (2, 4) collapses to the dimension "
                        "weighted sum",
                        bibracket_sl(2, {2, 2, 2}, {4, 4, 4}, N),
                        zeta_g_s(RootSystemA::make(2), 4, 2, N)));

  return out;
}

std::vector<CheckResult> check_character_identities(const CheckOptions& opts) {
  const long N = std::max<long>(opts.order, 8);
  std::vector<CheckResult> out;

  auto coeff_claim = [](const CharacterResult& c, const Rat& off,
                        const std::vector<long>& want) {
    if (c.series.offset() != off) {
      std::ostringstream os;
      os << "leading exponent " << c.series.offset() << ", want " << off;
      return os.str();
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      Rat e = off + static_cast<long>(i);
      if (e >= c.series.bound()) break;
      if (c.series.coeff_at(e) != want[i]) {
        std::ostringstream os;
        os << "coefficient of q^" << e << " is " << c.series.coeff_at(e) << ", want "
           << want[i];
        return os.str();
      }
    }
    return std::string{};
  };

  {
    CharacterResult c3 = sch_u(3, N);
    std::string bad = coeff_claim(c3, rat(1, 6), {1, 8, 44, 152, 487, 1352});
    out.push_back(claim("sch3-coefficients",
                        "sch U(3) = q^{1/6}(1 + 8q + 44q^2 + 152q^3 + 487q^4 + 1352q^5 + ..)",
                        bad.empty(), bad));
    out.push_back(compare("sch3-closed",
                          "sch U(3) = eta(3t)^3 eta^-5 [-E2/8 + 9 E2(3t)/8]", c3.series,
                          sch_u_closed(3, N)));
    QSeries finite = c3.series * eta_series(1, N).powed(5) * eta_series(3, N).powed(-3);
    QSeries torsion_side =
        (ct_product({weierstrass_p(N)}, Rat(N)) - torsion_p_third(N)).scaled(3);
    out.push_back(compare("sch3-assembly",
                          "3 [CT(wp) - wp(1/3)] recovers the eta-stripped sch U(3)", finite,
                          torsion_side));
  }
  {
    CharacterResult c5 = sch_u(5, N);
    std::string bad = coeff_claim(c5, rat(1, 4), {1, 24, 249, 1750, 9750, 45750});
    out.push_back(
        claim("sch5-coefficients",
              "sch U(5) = q^{1/4}(1 + 24q + 249q^2 + 1750q^3 + 9750q^4 + 45750q^5 + ..)",
              bad.empty(), bad));
    out.push_back(compare("sch5-closed",
                          "sch U(5) = eta(5t)^3 eta^-9 [25 E2^2/1152 - 125 E2 E2(5t)/192 + "
                          "3125 E2(5t)^2/1152 + E4/576 - 625 E4(5t)/576]",
                          c5.series, sch_u_closed(5, N)));
  }

  for (auto [m, floor] : std::vector<std::pair<long, long>>{{3, 16}, {5, 25}, {7, 36}}) {
    long n = std::max(N, floor);
    CheckResult r;
    r.id = "sch-recognize-m" + std::to_string(m);
    r.statement = "the eta-stripped sch U(m) is a weight-(m-1) combination of the level-m "
                  "quasimodular generators";
    try {
      Recognition rec = fm_recognize(m, n);
      r.pass = rec.found && rec.verified_through - rec.fitted_up_to >= 10;
      if (!r.pass)
        r.detail = "no certificate at order " + std::to_string(n);
      else if (n != N)
        r.detail = "ran at order " + std::to_string(n);
    } catch (const std::exception& ex) {
      r.detail = ex.what();
    }
    out.push_back(std::move(r));
  }

  {
    long n = std::max<long>(N, 10);
    ZetaSeries F = fm_zeta(3, n);
    bool ok = true;
    for (long e = -F.rad_neg(); e <= F.rad_pos() && ok; ++e) {
      QSeries f = F.entry(e);
      if (f.is_zero()) continue;
      Rat slope = e >= 0 ? F.slope_pos() : F.slope_neg();
      ok = f.offset() >= slope * (e >= 0 ? e : -e) + F.val_shift();
    }
    out.push_back(claim("fm-window-slopes",
                        "every stored entry of the m=3 theta quotient respects its declared "
                        "valuation slope",
                        ok, "an entry dips below the slope line"));
  }

  {
    long ninner = N / 3 + 1;
    QSeries rhs = g_hat(2, N).scaled(rat(-3, 2)) +
                  g_hat(2, ninner).dilated(3).truncated(Rat(N + 1)).scaled(rat(9, 2));
    out.push_back(compare("torsion-value", "wp(1/3) = -(3/2) G^_2 + (9/2) G^_2(3t)",
                          torsion_p_third(N), rhs));
  }

  {
    CharacterResult a = arakawa_char(1, 4, N);
    QSeries back = a.series * eta_series(1, N).powed(a.eta_power);
    out.push_back(compare("arakawa-roundtrip",
                          "the rank-1 level-4 character times eta^10 returns the defining "
                          "zeta sum",
                          back, zeta_g_s(RootSystemA::make(1), 4, 2, N)));
    bool ok = a.eta_power == 10 && arakawa_char(2, 4, std::min<long>(N, 12)).eta_power == 28;
    out.push_back(claim("arakawa-eta-power",
                        "eta powers follow dim(g) k - (k-2) rank: 10 for sl2 at k=4, 28 for "
                        "sl3 at k=4",
                        ok, "bookkeeping mismatch"));
  }

  return out;
}

std::vector<CheckResult> check_all(const CheckOptions& opts) {
  std::vector<CheckResult> out = check_graph_identities(opts);
  std::vector<CheckResult> z = check_zeta_identities(opts);
  std::vector<CheckResult> c = check_character_identities(opts);
  out.insert(out.end(), std::make_move_iterator(z.begin()), std::make_move_iterator(z.end()));
  out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  return out;
}

}  // namespace qzeta
