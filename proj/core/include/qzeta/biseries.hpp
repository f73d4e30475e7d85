// Two-variable expansions sum_e f_e(q) z^e with finitely many stored
// z-exponents.  The objects arising here (Fourier expansions of elliptic
// functions, character numerators) have infinite Laurent tails, so a window
// |e| <= radius is stored together with a promise about everything outside it:
// an unstored coefficient at z-exponent e beyond the window has q-valuation at
// least slope * |e| + val_shift.  A slope of -1 records that the side is empty
// beyond the window.  Constant-term extraction of a product checks that these
// promises make the dropped tails land beyond the requested q-truncation.
#pragma once

#include <map>
#include <vector>

#include "qzeta/qseries.hpp"

namespace qzeta {

class ZetaSeries {
 public:
  ZetaSeries() : qbound_(0), rad_pos_(0), rad_neg_(0), slope_pos_(-1), slope_neg_(-1), val_shift_(0) {}
  ZetaSeries(const Rat& qbound, long rad_pos, long rad_neg, const Rat& slope_pos,
             const Rat& slope_neg);

  // Stores f_e; requires |e| within the window, bound >= qbound, and the
  // q-valuation consistent with the slope promise.
  void set_entry(long e, QSeries f);
  // Coefficient of z^e for |e| within the window; absent entries are zero
  // through qbound.
  QSeries entry(long e) const;
  QSeries constant_term() const { return entry(0); }

  const std::map<long, QSeries>& window() const { return window_; }
  const Rat& qbound() const { return qbound_; }
  long rad_pos() const { return rad_pos_; }
  long rad_neg() const { return rad_neg_; }
  const Rat& slope_pos() const { return slope_pos_; }
  const Rat& slope_neg() const { return slope_neg_; }
  const Rat& val_shift() const { return val_shift_; }

  ZetaSeries operator-() const;
  ZetaSeries operator+(const ZetaSeries& rhs) const;
  ZetaSeries operator-(const ZetaSeries& rhs) const;
  ZetaSeries scaled(const Rat& c) const;
  // Multiply through by a one-variable series.
  ZetaSeries scaled_q(const QSeries& g) const;
  // z d/dz: multiplies f_e by e.
  ZetaSeries dz() const;
  // q d/dq acting entrywise on the f_e.
  ZetaSeries dtau() const;

 private:
  std::map<long, QSeries> window_;
  Rat qbound_;
  long rad_pos_, rad_neg_;
  Rat slope_pos_, slope_neg_;  // -1 encodes an empty side beyond the window
  Rat val_shift_;
};

// Constant term (in z) of the product of the given factors, exact through
// q^{target_bound}.  Throws if the windows and slope promises cannot justify
// that truncation.
QSeries ct_product(const std::vector<const ZetaSeries*>& factors, const Rat& target_bound);
QSeries ct_product(const std::vector<ZetaSeries>& factors, const Rat& target_bound);

// Polynomial truncation in a second variable: sum_{j=0}^{D} f_j(q) x^j with
// every slice known through the same q bound.  Unlike ZetaSeries there is no
// tail promise; exponents beyond D are simply unknown, so a product of two
// containers is honest only through the smaller x order.
class BiSeries {
 public:
  BiSeries(long xorder, const Rat& qbound);

  long xorder() const { return xorder_; }
  const Rat& qbound() const { return qbound_; }
  const QSeries& slice(long j) const;
  // Requires 0 <= j <= xorder and f known at least through qbound; the
  // stored slice is truncated to exactly qbound.
  void set_slice(long j, const QSeries& f);

  BiSeries operator+(const BiSeries& rhs) const;
  BiSeries operator-(const BiSeries& rhs) const;
  BiSeries operator*(const BiSeries& rhs) const;
  // multiply every slice by a one-variable series
  BiSeries scaled_q(const QSeries& g) const;

  // slicewise equality through q^through; demands equal x orders
  static bool agree(const BiSeries& a, const BiSeries& b, const Rat& through);

 private:
  std::vector<QSeries> coeffs_;
  long xorder_;
  Rat qbound_;
};

}  // namespace qzeta
