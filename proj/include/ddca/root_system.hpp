#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddca/rational.hpp"

namespace ddca {

enum class DynkinType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

DynkinType dynkin_from_char(char c);

/// Vector in the epsilon-coordinate weight-space model.
using Vec = std::vector<Rat>;

/// Root-system and affine Cartan data for a simple Lie algebra of rank >= 3.
///
/// The bilinear form is the one induced by the trace form of the defining
/// matrix representation: (x, y) = tr(xy) on the algebra, transported to the
/// weight space through the coroots. Concretely the Gram matrix of the
/// epsilon basis is the identity in type A and I/2 in types B, C, D.
class RootSystem {
 public:
  static RootSystem build(DynkinType type, int rank);

  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  /// Dimension of the epsilon-coordinate model (n for A_{n-1}, N otherwise).
  int ambient_dim() const { return ambient_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Vec& root(int idx) const { return roots_[idx]; }
  const std::vector<Vec>& roots() const { return roots_; }
  bool is_positive(int idx) const { return idx < num_positive_; }
  int num_positive() const { return num_positive_; }
  int negative_of(int idx) const;
  int root_index(const Vec& v) const;  // -1 if not a root
  /// Coordinates of roots()(idx) in the simple-root basis (integers).
  const std::vector<long>& simple_coords(int idx) const { return simple_coords_[idx]; }
  long height(int idx) const;

  const Vec& simple_root(int i) const { return roots_[simple_idx_[i]]; }  // i in [0, rank)
  int simple_root_index(int i) const { return simple_idx_[i]; }
  int theta_index() const { return theta_idx_; }
  const Vec& theta() const { return roots_[theta_idx_]; }

  /// Cartan matrix c_{ij} = 2(a_i, a_j)/(a_i, a_i), 0-based i, j.
  long cartan(int i, int j) const { return cartan_[i][j]; }
  /// Symmetrizers d_i = (a_i, a_i)/2, and d_0 = (theta, theta)/2.
  Rat d(int i) const { return d_[i]; }
  Rat d0() const { return d0_; }
  /// Extended-row entries c_{0j} and c_{j0} of the affine Cartan matrix.
  long affine_c0(int j) const { return c0_[j]; }
  long affine_cj0(int j) const { return cj0_[j]; }
  /// The unique k with c_{0k} != 0 (non-A types only).
  int special_node() const;

  /// Symmetric bilinear form on the weight-space model.
  Rat pairing(const Vec& x, const Vec& y) const;
  Rat pairing_roots(int i, int j) const { return pairing(roots_[i], roots_[j]); }

  bool is_root(const Vec& v) const { return root_index(v) != -1; }
  /// All m such that beta + m*alpha is a root (m ranges over a contiguous
  /// string through m = 0 when beta is a root).
  std::vector<long> root_string(int alpha_idx, int beta_idx) const;

  /// Reflection s_i acting on the weight-space model (simple index i).
  Vec simple_reflection(int i, const Vec& x) const;

  /// Canonical JSON document (type, rank, Cartan matrix, ordered root list).
  std::string to_json() const;

 private:
  DynkinType type_;
  int rank_ = 0;
  int ambient_ = 0;
  std::vector<Vec> roots_;  // positives first (by height then lex), then negatives in matching order
  int num_positive_ = 0;
  std::vector<std::vector<long>> simple_coords_;
  std::vector<int> simple_idx_;
  int theta_idx_ = -1;
  std::vector<std::vector<long>> cartan_;
  std::vector<Rat> d_;
  Rat d0_;
  std::vector<long> c0_, cj0_;
  Rat eps_gram_;  // (eps_i, eps_j) = eps_gram_ * delta_ij
};

}  // namespace ddca
