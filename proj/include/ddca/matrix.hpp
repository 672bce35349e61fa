#pragma once

#include <vector>

#include "ddca/rational.hpp"

namespace ddca {

/// Dense square matrix over Q(sqrt2). Defining representations here are tiny
/// (dimension <= 9), so no sparse storage is warranted.
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), e_(n * n, QuadRat(0)) {}

  static Mat unit(int n, int i, int j, QuadRat c = QuadRat(1)) {
    Mat m(n);
    m.at(i, j) = c;
    return m;
  }

  int dim() const { return n_; }
  QuadRat& at(int i, int j) { return e_[i * n_ + j]; }
  const QuadRat& at(int i, int j) const { return e_[i * n_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  Mat& operator*=(const QuadRat& c) {
    for (auto& x : e_) x *= c;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const QuadRat& c) { return a *= c; }
  friend Mat operator*(const QuadRat& c, Mat a) { return a *= c; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const QuadRat& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += x * b.at(k, j);
        }
      }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

  friend QuadRat trace_form(const Mat& a, const Mat& b) {
    QuadRat t(0);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) t += a.at(i, k) * b.at(k, i);
    return t;
  }

  Mat transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

 private:
  int n_;
  std::vector<QuadRat> e_;
};

}  // namespace ddca
