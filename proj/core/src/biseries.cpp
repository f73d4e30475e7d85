#include "qzeta/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qzeta {

namespace {

Rat side_promise(const Rat& slope, const Rat& shift, long e_abs) {
  if (slope < 0) return shift;
  return slope * e_abs + shift;
}

}  // namespace

ZetaSeries::ZetaSeries(const Rat& qbound, long rad_pos, long rad_neg, const Rat& slope_pos,
                       const Rat& slope_neg)
    : qbound_(qbound),
      rad_pos_(rad_pos),
      rad_neg_(rad_neg),
      slope_pos_(slope_pos),
      slope_neg_(slope_neg),
      val_shift_(0) {
  if (rad_pos < 0 || rad_neg < 0) throw std::invalid_argument("window radii must be nonnegative");
  if ((slope_pos_ < 0 && slope_pos_ != -1) || (slope_neg_ < 0 && slope_neg_ != -1))
    throw std::invalid_argument("tail slope must be nonnegative or the empty marker -1");
}

void ZetaSeries::set_entry(long e, QSeries f) {
  if (e > rad_pos_ || -e > rad_neg_)
    throw std::invalid_argument("z-exponent outside the stored window");
  if (f.bound() < qbound_)
    throw std::invalid_argument("window entry not known through the series bound");
  if (f.is_zero()) {
    window_.erase(e);
    return;
  }
  const Rat& slope = e > 0 ? slope_pos_ : slope_neg_;
  long e_abs = e >= 0 ? e : -e;
  if (e != 0 && f.offset() < side_promise(slope, val_shift_, e_abs))
    throw std::invalid_argument("window entry valuation violates the tail promise");
  if (e == 0 && f.offset() < val_shift_)
    throw std::invalid_argument("window entry valuation violates the base promise");
  window_[e] = std::move(f);
}

QSeries ZetaSeries::entry(long e) const {
  if (e > rad_pos_ || -e > rad_neg_)
    throw std::domain_error("z-exponent outside the stored window");
  auto it = window_.find(e);
  if (it == window_.end()) return QSeries::zero_through(qbound_);
  return it->second;
}

ZetaSeries ZetaSeries::operator-() const { return scaled(Rat(-1)); }

ZetaSeries ZetaSeries::operator+(const ZetaSeries& rhs) const {
  ZetaSeries r;
  r.qbound_ = std::min(qbound_, rhs.qbound_);
  r.rad_pos_ = std::min(rad_pos_, rhs.rad_pos_);
  r.rad_neg_ = std::min(rad_neg_, rhs.rad_neg_);
  auto join_slope = [](const Rat& a, const Rat& b) {
    if (a == -1) return b;
    if (b == -1) return a;
    return std::min(a, b);
  };
  r.slope_pos_ = join_slope(slope_pos_, rhs.slope_pos_);
  r.slope_neg_ = join_slope(slope_neg_, rhs.slope_neg_);
  r.val_shift_ = std::min(val_shift_, rhs.val_shift_);
  for (long e = -r.rad_neg_; e <= r.rad_pos_; ++e) {
    auto ia = window_.find(e);
    auto ib = rhs.window_.find(e);
    QSeries sum;
    if (ia == window_.end() && ib == rhs.window_.end()) continue;
    if (ia == window_.end())
      sum = ib->second.truncated(std::min(ib->second.bound(), qbound_));
    else if (ib == rhs.window_.end())
      sum = ia->second.truncated(std::min(ia->second.bound(), rhs.qbound_));
    else
      sum = ia->second + ib->second;
    if (!sum.is_zero()) r.window_[e] = std::move(sum);
  }
  return r;
}

ZetaSeries ZetaSeries::operator-(const ZetaSeries& rhs) const { return *this + (-rhs); }

ZetaSeries ZetaSeries::scaled(const Rat& c) const {
  ZetaSeries r = *this;
  if (c == 0) {
    r.window_.clear();
    return r;
  }
  for (auto& [e, f] : r.window_) f = f.scaled(c);
  return r;
}

ZetaSeries ZetaSeries::scaled_q(const QSeries& g) const {
  ZetaSeries r;
  Rat gval = g.is_zero() ? g.bound() : g.offset();
  r.qbound_ = std::min(qbound_ + gval, g.bound() + val_shift_);
  r.rad_pos_ = rad_pos_;
  r.rad_neg_ = rad_neg_;
  r.slope_pos_ = slope_pos_;
  r.slope_neg_ = slope_neg_;
  r.val_shift_ = val_shift_ + gval;
  for (const auto& [e, f] : window_) {
    QSeries prod = f * g;
    if (!prod.is_zero()) r.window_[e] = std::move(prod);
  }
  return r;
}

ZetaSeries ZetaSeries::dz() const {
  ZetaSeries r = *this;
  r.window_.clear();
  for (const auto& [e, f] : window_) {
    if (e == 0) continue;
    r.window_[e] = f.scaled(Rat(e));
  }
  return r;
}

ZetaSeries ZetaSeries::dtau() const {
  ZetaSeries r = *this;
  r.window_.clear();
  for (const auto& [e, f] : window_) {
    QSeries d = f.q_derived();
    if (!d.is_zero()) r.window_[e] = std::move(d);
  }
  return r;
}

namespace {

struct CtFactor {
  const ZetaSeries* s;
  // Effective per-side slopes for valuation lower bounds; empty marks a side
  // with no entries at all.
  bool pos_empty, neg_empty;
  Rat pos_slope, neg_slope;
};

bool side_has_entries(const ZetaSeries& s, int dir) {
  for (const auto& [e, f] : s.window())
    if ((dir > 0 && e > 0) || (dir < 0 && e < 0)) return true;
  if (dir > 0) return s.slope_pos() != -1;
  return s.slope_neg() != -1;
}

struct CtEngine {
  std::vector<CtFactor> fs;
  Rat target;
  // Suffix data over fs[idx..]: minimal effective slope per side (empty flag
  // when no remaining factor has entries on that side) and summed val shifts.
  std::vector<char> suf_pos_empty, suf_neg_empty;
  std::vector<Rat> suf_pos_slope, suf_neg_slope, suf_shift;
  QSeries acc;

  Rat remaining_cost(size_t idx, long t, bool& impossible) const {
    impossible = false;
    Rat c = suf_shift[idx];
    if (t > 0) {
      if (suf_pos_empty[idx]) {
        impossible = true;
        return c;
      }
      c += suf_pos_slope[idx] * t;
    } else if (t < 0) {
      if (suf_neg_empty[idx]) {
        impossible = true;
        return c;
      }
      c += suf_neg_slope[idx] * (-t);
    }
    return c;
  }

  void recurse(size_t idx, long sum, const QSeries& partial, const Rat& partial_val) {
    if (idx + 1 == fs.size()) {
      long need = -sum;
      const auto& w = fs[idx].s->window();
      auto it = w.find(need);
      if (it == w.end()) return;
      acc += (partial * it->second).truncated(target);
      return;
    }
    for (const auto& [e, f] : fs[idx].s->window()) {
      bool impossible = false;
      Rat rem = remaining_cost(idx + 1, -(sum + e), impossible);
      if (impossible) continue;
      if (partial_val + f.offset() + rem >= target) continue;
      recurse(idx + 1, sum + e, (partial * f).truncated(target), partial_val + f.offset());
    }
  }
};

}  // namespace

QSeries ct_product(const std::vector<const ZetaSeries*>& factors, const Rat& target_bound) {
  if (factors.empty()) throw std::invalid_argument("constant term of an empty product");
  if (factors.size() == 1) {
    const ZetaSeries& s = *factors[0];
    if (s.qbound() < target_bound)
      throw std::domain_error("series not known through the requested bound");
    return s.constant_term().truncated(target_bound);
  }

  CtEngine eng;
  eng.target = target_bound;
  for (const ZetaSeries* s : factors) {
    CtFactor f;
    f.s = s;
    f.pos_empty = !side_has_entries(*s, +1);
    f.neg_empty = !side_has_entries(*s, -1);
    f.pos_slope = s->slope_pos() == -1 ? Rat(0) : s->slope_pos();
    f.neg_slope = s->slope_neg() == -1 ? Rat(0) : s->slope_neg();
    eng.fs.push_back(f);
  }
  // Largest window last: it only ever serves point lookups.
  std::stable_sort(eng.fs.begin(), eng.fs.end(), [](const CtFactor& a, const CtFactor& b) {
    return a.s->window().size() < b.s->window().size();
  });

  size_t r = eng.fs.size();
  // Check that exponents dropped outside some window cannot reach the target
  // truncation: an out-of-window exponent of size E costs at least its own
  // slope times E, plus the cheapest opposite-side slope among the other
  // factors times E, plus everybody's valuation shift.
  Rat total_shift(0);
  for (const auto& f : eng.fs) total_shift += f.s->val_shift();
  for (size_t i = 0; i < r; ++i) {
    for (int dir : {+1, -1}) {
      const Rat& tail_slope = dir > 0 ? eng.fs[i].s->slope_pos() : eng.fs[i].s->slope_neg();
      if (tail_slope == -1) continue;  // no entries beyond this side's window
      long rad = dir > 0 ? eng.fs[i].s->rad_pos() : eng.fs[i].s->rad_neg();
      bool opp_possible = false;
      Rat opp_slope;
      for (size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        bool empty = dir > 0 ? eng.fs[j].neg_empty : eng.fs[j].pos_empty;
        if (empty) continue;
        Rat sl = dir > 0 ? eng.fs[j].neg_slope : eng.fs[j].pos_slope;
        if (!opp_possible || sl < opp_slope) opp_slope = sl;
        opp_possible = true;
      }
      if (!opp_possible) continue;  // nothing can cancel such an exponent
      Rat bound = (tail_slope + opp_slope) * (rad + 1) + total_shift;
      if (bound < target_bound)
        throw std::domain_error("window too narrow for the requested constant-term bound");
    }
  }

  eng.suf_pos_empty.assign(r + 1, 1);
  eng.suf_neg_empty.assign(r + 1, 1);
  eng.suf_pos_slope.assign(r + 1, Rat(0));
  eng.suf_neg_slope.assign(r + 1, Rat(0));
  eng.suf_shift.assign(r + 1, Rat(0));
  for (size_t idx = r; idx-- > 0;) {
    eng.suf_shift[idx] = eng.suf_shift[idx + 1] + eng.fs[idx].s->val_shift();
    eng.suf_pos_empty[idx] = eng.suf_pos_empty[idx + 1];
    eng.suf_pos_slope[idx] = eng.suf_pos_slope[idx + 1];
    if (!eng.fs[idx].pos_empty) {
      if (eng.suf_pos_empty[idx] || eng.fs[idx].pos_slope < eng.suf_pos_slope[idx])
        eng.suf_pos_slope[idx] = eng.fs[idx].pos_slope;
      eng.suf_pos_empty[idx] = 0;
    }
    eng.suf_neg_empty[idx] = eng.suf_neg_empty[idx + 1];
    eng.suf_neg_slope[idx] = eng.suf_neg_slope[idx + 1];
    if (!eng.fs[idx].neg_empty) {
      if (eng.suf_neg_empty[idx] || eng.fs[idx].neg_slope < eng.suf_neg_slope[idx])
        eng.suf_neg_slope[idx] = eng.fs[idx].neg_slope;
      eng.suf_neg_empty[idx] = 0;
    }
  }

  eng.acc = QSeries::zero_through(target_bound);
  long start_order = to_long(rat_floor(target_bound)) + 1;
  if (start_order < 1) start_order = 1;
  eng.recurse(0, 0, QSeries::constant(Rat(1), start_order), Rat(0));
  if (eng.acc.bound() < target_bound)
    throw std::domain_error("constant term not determined through the requested bound");
  return eng.acc.truncated(target_bound);
}

QSeries ct_product(const std::vector<ZetaSeries>& factors, const Rat& target_bound) {
  std::vector<const ZetaSeries*> ptrs;
  ptrs.reserve(factors.size());
  for (const auto& f : factors) ptrs.push_back(&f);
  return ct_product(ptrs, target_bound);
}

BiSeries::BiSeries(long xorder, const Rat& qbound) : xorder_(xorder), qbound_(qbound) {
  if (xorder < 0) throw std::invalid_argument("x order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(xorder + 1), QSeries::zero_through(qbound));
}

const QSeries& BiSeries::slice(long j) const {
  if (j < 0 || j > xorder_) throw std::out_of_range("x exponent outside the truncation");
  return coeffs_[static_cast<std::size_t>(j)];
}

void BiSeries::set_slice(long j, const QSeries& f) {
  if (j < 0 || j > xorder_) throw std::out_of_range("x exponent outside the truncation");
  if (f.bound() < qbound_)
    throw std::domain_error("slice known to a lower order than the container");
  coeffs_[static_cast<std::size_t>(j)] = f.truncated(qbound_);
}

BiSeries BiSeries::operator+(const BiSeries& rhs) const {
  long D = std::min(xorder_, rhs.xorder_);
  BiSeries out(D, std::min(qbound_, rhs.qbound_));
  for (long j = 0; j <= D; ++j) out.set_slice(j, slice(j) + rhs.slice(j));
  return out;
}

BiSeries BiSeries::operator-(const BiSeries& rhs) const {
  long D = std::min(xorder_, rhs.xorder_);
  BiSeries out(D, std::min(qbound_, rhs.qbound_));
  for (long j = 0; j <= D; ++j) out.set_slice(j, slice(j) - rhs.slice(j));
  return out;
}

BiSeries BiSeries::operator*(const BiSeries& rhs) const {
  long D = std::min(xorder_, rhs.xorder_);
  BiSeries out(D, std::min(qbound_, rhs.qbound_));
  for (long j = 0; j <= D; ++j) {
    QSeries s = QSeries::zero_through(out.qbound_);
    for (long i = 0; i <= j; ++i) s = s + slice(i) * rhs.slice(j - i);
    out.set_slice(j, s);
  }
  return out;
}

BiSeries BiSeries::scaled_q(const QSeries& g) const {
  Rat qb = qbound_;
  if (g.bound() < qb) qb = g.bound();
  BiSeries out(xorder_, qb);
  for (long j = 0; j <= xorder_; ++j) out.set_slice(j, slice(j) * g);
  return out;
}

bool BiSeries::agree(const BiSeries& a, const BiSeries& b, const Rat& through) {
  if (a.xorder_ != b.xorder_)
    throw std::invalid_argument("x orders differ");
  for (long j = 0; j <= a.xorder_; ++j)
    if (!QSeries::agree(a.slice(j), b.slice(j), through)) return false;
  return true;
}

}  // namespace qzeta
