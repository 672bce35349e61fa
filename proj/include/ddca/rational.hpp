#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddca {

using Rat = mpq_class;

/// Thrown when an engine invariant is violated (exit code 3 territory).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Thrown on invalid configuration (unsupported type, rank, suite mismatch).
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

/// Element of the real quadratic field Q(sqrt(2)), kept exact: a + b*sqrt(2).
/// Type A computations stay in Q (b == 0); the B/C/D Weyl operators need
/// sqrt(2) because e~_i = sqrt(2/(a_i,a_i)) X_i^+.
class QuadRat {
 public:
  QuadRat() : a_(0), b_(0) {}
  QuadRat(int v) : a_(v), b_(0) {}
  QuadRat(long v) : a_(v), b_(0) {}
  QuadRat(const Rat& v) : a_(v), b_(0) {}
  QuadRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadRat sqrt2() { return QuadRat(Rat(0), Rat(1)); }

  const Rat& rat_part() const { return a_; }
  const Rat& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// The rational value; throws if a sqrt(2) component survived.
  const Rat& as_rational() const {
    if (b_ != 0) throw internal_error("QuadRat: irrational value where a rational was required");
    return a_;
  }

  QuadRat operator-() const { return QuadRat(-a_, -b_); }

  QuadRat& operator+=(const QuadRat& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadRat& operator-=(const QuadRat& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadRat& operator*=(const QuadRat& o) {
    Rat na = a_ * o.a_ + 2 * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }

  QuadRat inverse() const {
    // norm = a^2 - 2 b^2 is nonzero for nonzero elements (sqrt2 irrational).
    Rat norm = a_ * a_ - 2 * b_ * b_;
    if (norm == 0) throw internal_error("QuadRat: inverse of zero");
    return QuadRat(a_ / norm, -b_ / norm);
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }

  friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

  /// Total order used only for canonical printing/sorting, not arithmetic.
  friend bool operator<(const QuadRat& x, const QuadRat& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c < 0;
    return cmp(x.b_, y.b_) < 0;
  }

  std::string str() const;

 private:
  Rat a_, b_;
};

std::string rat_str(const Rat& r);

}  // namespace ddca
