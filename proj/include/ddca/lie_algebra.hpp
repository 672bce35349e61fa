#pragma once

#include <string>
#include <vector>

#include "ddca/matrix.hpp"
#include "ddca/root_system.hpp"

namespace ddca {

/// Coordinates of a Lie algebra element in the fixed basis of the frame.
using GVec = std::vector<QuadRat>;

/// Exact matrix realization of a classical simple Lie algebra together with a
/// Chevalley frame: one root vector per root with (X_a^+, X_a^-) = 1 under the
/// trace form of the defining representation, Cartan elements H_a = [X_a^+,
/// X_a^-], and the rescaling of X_{theta-a_k} that makes
/// X_theta^- = [X_k^-, X_{theta-a_k}^-] hold on the nose.
///
/// Fixed basis (also the PBW order of the enveloping algebra): negative root
/// vectors by height ascending (lowest first), then the Cartan elements
/// H_1..H_N, then positive root vectors by height ascending.
class LieAlgebra {
 public:
  static LieAlgebra realize(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_dim() const { return matdim_; }

  /// Basis access. basis_index_of_root maps a root index to the basis slot of
  /// its normalized root vector; cartan_basis_index(i) the slot of H_{i+1}.
  const Mat& basis(int b) const { return basis_[b]; }
  int basis_index_of_root(int root_idx) const { return root_to_basis_[root_idx]; }
  int cartan_basis_index(int i) const { return cartan_basis_[i]; }
  bool basis_is_cartan(int b) const { return basis_root_[b] < 0; }
  /// Root index of a root-vector basis slot (-1 for Cartan slots).
  int basis_root(int b) const { return basis_root_[b]; }

  const Mat& root_vector(int root_idx) const { return basis_[root_to_basis_[root_idx]]; }
  const Mat& cartan(int i) const { return basis_[cartan_basis_[i]]; }  // H_{i+1}, 0-based i
  Mat coroot(int root_idx) const;                                      // H_a = [X_a^+, X_a^-]

  Mat bracket(const Mat& x, const Mat& y) const { return commutator(x, y); }
  QuadRat form(const Mat& x, const Mat& y) const { return trace_form(x, y); }

  /// Exact coordinates in the fixed basis; throws if m is not in the algebra.
  GVec coords(const Mat& m) const;
  Mat from_coords(const GVec& v) const;

  /// Structure constants: bracket of basis elements as a basis vector.
  const GVec& bracket_basis(int a, int b) const { return bracket_table_[a * dim() + b]; }

  /// Dual bases of the Cartan subalgebra under the trace form:
  /// dual_cartan(i) = h~^i with (h~^i, H_j) = delta_ij.
  const Mat& dual_cartan(int i) const { return dual_cartan_[i]; }

  /// Triple-exponential operator s_i = exp(ad f~) exp(-ad e~) exp(ad f~).
  Mat weyl_op(int i, const Mat& x) const;
  /// Applies word.back() first (composition s_{w0} ... s_{w_{k-1}} reading the
  /// word left to right as operator composition).
  Mat weyl_word(const std::vector<int>& word, const Mat& x) const;
  /// A reduced word for the longest Weyl element (canonical per type/rank).
  const std::vector<int>& w0_word() const { return w0_word_; }

  /// Type A helpers: E_ab (1-based) and H_ab = E_aa - E_bb.
  Mat E(int a, int b) const;
  Mat H_ab(int a, int b) const;

  std::string describe_basis(int b) const;

 private:
  RootSystem rs_{RootSystem::build(DynkinType::A, 3)};
  int matdim_ = 0;
  std::vector<Mat> basis_;
  std::vector<Mat> dual_basis_;  // (dual_basis_[a], basis_[b]) = delta_ab
  std::vector<int> root_to_basis_;
  std::vector<int> cartan_basis_;
  std::vector<int> basis_root_;
  std::vector<Mat> dual_cartan_;
  std::vector<GVec> bracket_table_;
  std::vector<int> w0_word_;
};

}  // namespace ddca
