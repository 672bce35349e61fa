#include "ddca/param_scalar.hpp"

#include <sstream>

namespace ddca {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string QuadRat::str() const {
  if (b_ == 0) return rat_str(a_);
  std::ostringstream os;
  if (a_ != 0) os << rat_str(a_) << "+";
  os << rat_str(b_) << "*r2";
  return os.str();
}

QuadRat ParamScalar::specialize(const Rat& l0, const Rat& b0) const {
  QuadRat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat p(1);
    for (unsigned i = 0; i < e.first; ++i) p *= l0;
    for (unsigned i = 0; i < e.second; ++i) p *= b0;
    acc += c * QuadRat(p);
  }
  return acc;
}

unsigned ParamScalar::total_degree_if_homogeneous(bool* ok) const {
  *ok = true;
  if (terms_.empty()) return 0;
  unsigned d = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != d) {
      *ok = false;
      return 0;
    }
  return d;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    if (!first) {
      if (cs.size() && cs[0] == '-' && c.is_rational()) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool unit = (c == QuadRat(1)) && (e.first || e.second);
    bool neg_unit = (c == QuadRat(-1)) && (e.first || e.second);
    if (neg_unit) {
      os << "-";
    } else if (!unit) {
      os << cs;
      if (e.first || e.second) os << "*";
    }
    if (e.first) {
      os << "l";
      if (e.first > 1) os << "^" << e.first;
      if (e.second) os << "*";
    }
    if (e.second) {
      os << "b";
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

}  // namespace ddca
