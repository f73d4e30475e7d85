#include "qzeta/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qzeta/numbers.hpp"

namespace qzeta {

namespace {

QSeries zero_with_bound(const Rat& bound) { return QSeries::zero_through(bound); }

}  // namespace

QSeries QSeries::zero_through(const Rat& bound) {
  long ord = 0;
  Int fl = rat_floor(bound);
  if (fl > 1) ord = to_long(fl) - 1;
  return zero(ord);
}

void QSeries::canonicalize() {
  if (scale_ < 1) throw std::invalid_argument("series grid denominator must be positive");
  if ((long)coeffs_.size() != order_ + 1)
    throw std::invalid_argument("series coefficient count disagrees with order");
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    Rat b = bound();
    offset_ = 0;
    scale_ = 1;
    coeffs_.clear();
    order_ = 0;
    Int fl = rat_floor(b);
    if (fl > 1) order_ = to_long(fl) - 1;
    return;
  }
  if (lead > 0) {
    offset_ += rat((long)lead, scale_);
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + (long)lead);
    order_ -= (long)lead;
  }
  if (scale_ > 1) {
    long g = scale_;
    for (long i = 1; i <= order_ && g > 1; ++i)
      if (coeffs_[i] != 0) g = std::gcd(g, i);
    if (g > 1) {
      long new_len = (order_ + 1) / g;
      std::vector<Rat> reduced((size_t)new_len);
      for (long j = 0; j < new_len; ++j) reduced[j] = std::move(coeffs_[j * g]);
      coeffs_ = std::move(reduced);
      order_ = new_len - 1;
      scale_ /= g;
    }
  }
}

QSeries QSeries::zero(long order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  QSeries s;
  s.order_ = order;
  return s;
}

QSeries QSeries::constant(const Rat& c, long order) {
  return monomial(c, Rat(0), order);
}

QSeries QSeries::monomial(const Rat& c, const Rat& exp, long order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  QSeries s;
  s.offset_ = exp;
  s.order_ = order;
  s.coeffs_.assign((size_t)order + 1, Rat(0));
  s.coeffs_[0] = c;
  s.canonicalize();
  return s;
}

QSeries QSeries::from_parts(const Rat& offset, long scale, std::vector<Rat> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient slot");
  QSeries s;
  s.offset_ = offset;
  s.scale_ = scale;
  s.order_ = (long)coeffs.size() - 1;
  s.coeffs_ = std::move(coeffs);
  s.canonicalize();
  return s;
}

Rat QSeries::bound() const { return offset_ + rat(order_ + 1, scale_); }

bool QSeries::knows(const Rat& e) const { return e < bound(); }

Rat QSeries::coeff_at(const Rat& e) const {
  if (!knows(e)) throw std::domain_error("coefficient beyond truncation: q^" + rat_str(e));
  if (is_zero()) return Rat(0);
  Rat rel = (e - offset_) * scale_;
  if (rel < 0 || !rat_is_integer(rel)) return Rat(0);
  long idx = to_long(rel.get_num());
  return coeffs_[(size_t)idx];
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

QSeries QSeries::operator+(const QSeries& rhs) const {
  Rat b = std::min(bound(), rhs.bound());
  if (is_zero() && rhs.is_zero()) return zero_with_bound(b);
  if (is_zero()) return rhs.truncated(b);
  if (rhs.is_zero()) return truncated(b);

  Rat base = std::min(offset_, rhs.offset_);
  long grid = std::lcm(scale_, rhs.scale_);
  Rat diff = offset_ - rhs.offset_;
  grid = std::lcm(grid, to_long(Int(diff.get_den())));
  long len = rat_to_long(Rat((b - base) * grid));
  if (len <= 0) return zero_with_bound(b);
  std::vector<Rat> acc((size_t)len);
  auto scatter = [&](const QSeries& s, bool negate) {
    long start = rat_to_long(Rat((s.offset_ - base) * grid));
    long step = grid / s.scale_;
    for (long i = 0; i <= s.order_; ++i) {
      long f = start + i * step;
      if (f >= len) break;
      if (negate)
        acc[(size_t)f] -= s.coeffs_[(size_t)i];
      else
        acc[(size_t)f] += s.coeffs_[(size_t)i];
    }
  };
  scatter(*this, false);
  scatter(rhs, false);
  return from_parts(base, grid, std::move(acc));
}

QSeries QSeries::operator-(const QSeries& rhs) const { return *this + (-rhs); }

QSeries QSeries::operator*(const QSeries& rhs) const {
  if (is_zero() && rhs.is_zero()) return zero_with_bound(bound() + rhs.bound());
  if (is_zero()) return zero_with_bound(bound() + rhs.offset_);
  if (rhs.is_zero()) return zero_with_bound(rhs.bound() + offset_);

  Rat base = offset_ + rhs.offset_;
  Rat b = std::min(bound() + rhs.offset_, rhs.bound() + offset_);
  long grid = std::lcm(scale_, rhs.scale_);
  long len = rat_to_long(Rat((b - base) * grid));
  if (len <= 0) return zero_with_bound(b);
  std::vector<Rat> acc((size_t)len);
  long step_a = grid / scale_;
  long step_b = grid / rhs.scale_;
  Rat term;
  for (long i = 0; i <= order_; ++i) {
    if (coeffs_[(size_t)i] == 0) continue;
    long fa = i * step_a;
    if (fa >= len) break;
    for (long j = 0; j <= rhs.order_; ++j) {
      long f = fa + j * step_b;
      if (f >= len) break;
      if (rhs.coeffs_[(size_t)j] == 0) continue;
      term = coeffs_[(size_t)i] * rhs.coeffs_[(size_t)j];
      acc[(size_t)f] += term;
    }
  }
  return from_parts(base, grid, std::move(acc));
}

QSeries QSeries::scaled(const Rat& c) const {
  if (c == 0) return zero_with_bound(bound());
  QSeries r = *this;
  for (Rat& x : r.coeffs_) x *= c;
  return r;
}

QSeries QSeries::shifted(const Rat& e) const {
  QSeries r = *this;
  r.offset_ += e;
  return r;
}

QSeries QSeries::inverted() const {
  if (is_zero()) throw std::domain_error("cannot invert a series with no known nonzero term");
  QSeries r;
  r.offset_ = -offset_;
  r.scale_ = scale_;
  r.order_ = order_;
  r.coeffs_.assign((size_t)order_ + 1, Rat(0));
  Rat lead_inv = Rat(1) / coeffs_[0];
  r.coeffs_[0] = lead_inv;
  Rat s;
  for (long n = 1; n <= order_; ++n) {
    s = 0;
    for (long k = 1; k <= n; ++k) {
      if (coeffs_[(size_t)k] == 0 || r.coeffs_[(size_t)(n - k)] == 0) continue;
      s += coeffs_[(size_t)k] * r.coeffs_[(size_t)(n - k)];
    }
    if (s != 0) r.coeffs_[(size_t)n] = -lead_inv * s;
  }
  r.canonicalize();
  return r;
}

QSeries QSeries::powed(long k) const {
  if (k == 0) return constant(Rat(1), order_);
  if (k < 0) return inverted().powed(-k);
  QSeries base = *this;
  QSeries acc;
  bool have = false;
  while (k > 0) {
    if (k & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

QSeries QSeries::dilated(long m) const {
  if (m < 1) throw std::invalid_argument("dilation factor must be positive");
  if (m == 1) return *this;
  if (is_zero()) return zero_with_bound(bound() * m);
  QSeries r;
  r.offset_ = offset_ * m;
  r.scale_ = scale_;
  r.order_ = m * (order_ + 1) - 1;
  r.coeffs_.assign((size_t)r.order_ + 1, Rat(0));
  for (long i = 0; i <= order_; ++i) r.coeffs_[(size_t)(i * m)] = coeffs_[(size_t)i];
  r.canonicalize();
  return r;
}

QSeries QSeries::q_derived() const {
  if (is_zero()) return *this;
  QSeries r = *this;
  for (long i = 0; i <= order_; ++i) {
    if (r.coeffs_[(size_t)i] == 0) continue;
    r.coeffs_[(size_t)i] *= offset_ + rat(i, scale_);
  }
  r.canonicalize();
  return r;
}

QSeries QSeries::truncated(const Rat& new_bound) const {
  Rat b = bound();
  if (new_bound >= b) return *this;
  if (is_zero()) return zero_with_bound(new_bound);
  // keep every grid exponent below new_bound; any exponent in between is off
  // the declared grid, hence an exact zero, so knowledge extends to the next
  // grid point and never falls short of what was requested
  Int keep = rat_ceil((new_bound - offset_) * scale_);
  if (keep <= 0) return zero_with_bound(new_bound);
  long n = to_long(keep);
  QSeries r;
  r.offset_ = offset_;
  r.scale_ = scale_;
  r.order_ = n - 1;
  r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + n);
  r.canonicalize();
  return r;
}

bool QSeries::agree(const QSeries& a, const QSeries& b, const Rat& through_bound) {
  if (a.bound() < through_bound || b.bound() < through_bound)
    throw std::domain_error("series not known through the requested comparison bound");
  QSeries d = a - b;
  if (d.is_zero()) return true;
  return d.offset_ >= through_bound;
}

QSeries pochhammer(long n, long order) {
  if (n < 0) throw std::invalid_argument("pochhammer length must be nonnegative");
  std::vector<Rat> c((size_t)order + 1);
  c[0] = 1;
  for (long j = 1; j <= std::min(n, order); ++j)
    for (long idx = order; idx >= j; --idx) c[(size_t)idx] -= c[(size_t)(idx - j)];
  return QSeries::from_parts(Rat(0), 1, std::move(c));
}

QSeries pochhammer_shifted(long c0, long k, long order) {
  if (c0 < 1 || k < 0) throw std::invalid_argument("bad shifted pochhammer parameters");
  std::vector<Rat> c((size_t)order + 1);
  c[0] = 1;
  for (long i = 0; i < k; ++i) {
    long j = c0 + i;
    if (j > order) break;
    for (long idx = order; idx >= j; --idx) c[(size_t)idx] -= c[(size_t)(idx - j)];
  }
  return QSeries::from_parts(Rat(0), 1, std::move(c));
}

QSeries euler_product(long order) { return pochhammer(order, order); }

QSeries euler_product_shifted(long c0, long order) {
  return pochhammer_shifted(c0, std::max<long>(0, order - c0 + 1), order);
}

QSeries reciprocal_power(long a, long k, long order) {
  if (a < 1 || k < 0) throw std::invalid_argument("bad reciprocal power parameters");
  if (k == 0) return QSeries::constant(Rat(1), order);
  std::vector<Rat> c((size_t)order + 1);
  for (long j = 0; a * j <= order; ++j) c[(size_t)(a * j)] = Rat(binomial(j + k - 1, k - 1));
  return QSeries::from_parts(Rat(0), 1, std::move(c));
}

QSeries eta_series(long m, long order) {
  if (m < 1) throw std::invalid_argument("eta dilation must be positive");
  std::vector<Rat> c((size_t)order + 1);
  c[0] = 1;
  for (long j = m; j <= order; j += m)
    for (long idx = order; idx >= j; --idx) c[(size_t)idx] -= c[(size_t)(idx - j)];
  return QSeries::from_parts(rat(m, 24), 1, std::move(c));
}

}  // namespace qzeta
