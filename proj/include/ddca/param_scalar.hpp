#pragma once

#include <map>
#include <string>
#include <utility>

#include "ddca/rational.hpp"

namespace ddca {

/// Exact element of Q(sqrt2)[lambda, beta], the coefficient ring for every
/// deformed computation. Terms are stored sparsely by exponent pair
/// (deg_lambda, deg_beta); zero coefficients are dropped eagerly so equality
/// is plain term-map equality.
class ParamScalar {
 public:
  using Exp = std::pair<unsigned, unsigned>;  // (deg lambda, deg beta)

  ParamScalar() = default;
  ParamScalar(int v) { add_term(0, 0, QuadRat(v)); }
  ParamScalar(const Rat& v) { add_term(0, 0, QuadRat(v)); }
  ParamScalar(const QuadRat& v) { add_term(0, 0, v); }

  static ParamScalar lambda() {
    ParamScalar s;
    s.add_term(1, 0, QuadRat(1));
    return s;
  }
  static ParamScalar beta() {
    ParamScalar s;
    s.add_term(0, 1, QuadRat(1));
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, QuadRat>& terms() const { return terms_; }

  void add_term(unsigned dl, unsigned db, const QuadRat& c) {
    if (c.is_zero()) return;
    auto key = Exp{dl, db};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ParamScalar& operator+=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  ParamScalar& operator-=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  ParamScalar operator-() const {
    ParamScalar r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend ParamScalar operator+(ParamScalar x, const ParamScalar& y) { return x += y; }
  friend ParamScalar operator-(ParamScalar x, const ParamScalar& y) { return x -= y; }

  friend ParamScalar operator*(const ParamScalar& x, const ParamScalar& y) {
    ParamScalar r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) r.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
    return r;
  }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

  friend bool operator==(const ParamScalar& x, const ParamScalar& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const ParamScalar& x, const ParamScalar& y) { return !(x == y); }
  friend bool operator<(const ParamScalar& x, const ParamScalar& y) { return x.terms_ < y.terms_; }

  /// Exact evaluation at lambda = l0, beta = b0.
  QuadRat specialize(const Rat& l0, const Rat& b0) const;

  /// True iff every term has deg_lambda + deg_beta == d (lambda and beta both
  /// carry bigrade (1,1), so homogeneity is measured by total degree).
  unsigned total_degree_if_homogeneous(bool* ok) const;

  /// Canonical rendering "c*l^a*b^e + ..." sorted by (a,e) lexicographic.
  std::string str() const;

 private:
  std::map<Exp, QuadRat> terms_;
};

}  // namespace ddca
