// Truncated q-expansions with exact rational coefficients and a rational
// leading exponent.  A series
//
//     q^{offset} * sum_{i=0..order} c_i q^{i/scale}
//
// is "known modulo q^{offset + (order+1)/scale}": coefficients at or beyond
// that bound are unknown rather than zero.  Binary operations keep the
// tightest honest truncation of their operands; mixing series whose exponents
// live on different arithmetic grids rescales the index grid to the common
// denominator.
//
// Canonical form: the leading stored coefficient is nonzero (the offset is the
// q-valuation), the grid denominator is minimal, and the zero series is stored
// as offset 0 with an empty coefficient array (its truncation order survives).
#pragma once

#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

class QSeries {
 public:
  QSeries() : offset_(0), scale_(1), order_(0) {}

  static QSeries zero(long order);
  // Zero series known through q^{bound}.
  static QSeries zero_through(const Rat& bound);
  static QSeries constant(const Rat& c, long order);
  // c * q^{exp}, known through relative order `order` past exp.
  static QSeries monomial(const Rat& c, const Rat& exp, long order);
  // Coefficients on the grid offset + i/scale; canonicalized.
  static QSeries from_parts(const Rat& offset, long scale, std::vector<Rat> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  const Rat& offset() const { return offset_; }
  long scale() const { return scale_; }
  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // First unknown exponent: offset + (order+1)/scale.
  Rat bound() const;
  // Whether the coefficient at exponent e is determined by this truncation.
  bool knows(const Rat& e) const;
  // Coefficient at exponent e; zero off the stored grid.  Throws if e is at or
  // beyond the truncation bound.
  Rat coeff_at(const Rat& e) const;

  QSeries operator-() const;
  QSeries operator+(const QSeries& rhs) const;
  QSeries operator-(const QSeries& rhs) const;
  QSeries operator*(const QSeries& rhs) const;
  QSeries& operator+=(const QSeries& rhs) { return *this = *this + rhs; }
  QSeries& operator-=(const QSeries& rhs) { return *this = *this - rhs; }
  QSeries& operator*=(const QSeries& rhs) { return *this = *this * rhs; }

  QSeries scaled(const Rat& c) const;        // c * this
  QSeries shifted(const Rat& e) const;       // q^e * this
  QSeries inverted() const;                  // 1/this; requires a nonzero leading term
  QSeries powed(long k) const;               // integer powers, negative via inversion
  QSeries dilated(long m) const;             // q -> q^m
  QSeries q_derived() const;                 // q d/dq, acts on the true exponents
  QSeries truncated(const Rat& new_bound) const;

  // Exact agreement of all coefficients at exponents < through_bound; both
  // operands must know that far.
  static bool agree(const QSeries& a, const QSeries& b, const Rat& through_bound);

  bool operator==(const QSeries& rhs) const = default;

 private:
  void canonicalize();

  Rat offset_;
  long scale_;
  long order_;
  std::vector<Rat> coeffs_;
};

inline QSeries operator*(const Rat& c, const QSeries& s) { return s.scaled(c); }

// (q;q)_n truncated at q^{order}.
QSeries pochhammer(long n, long order);
// (q^c;q)_k = prod_{i=0..k-1} (1 - q^{c+i}).
QSeries pochhammer_shifted(long c, long k, long order);
// (q;q)_inf through q^{order} (factors beyond the order are omitted exactly).
QSeries euler_product(long order);
// (q^c;q)_inf through q^{order}.
QSeries euler_product_shifted(long c, long order);
// 1/(1-q^a)^k through q^{order}.
QSeries reciprocal_power(long a, long k, long order);
// Dedekind eta = q^{1/24} (q;q)_inf, optionally dilated: eta(m tau).
QSeries eta_series(long m, long order);

}  // namespace qzeta
