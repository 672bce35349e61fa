#include "ddca/root_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ddca {

DynkinType dynkin_from_char(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return DynkinType::A;
    case 'B':
    case 'b':
      return DynkinType::B;
    case 'C':
    case 'c':
      return DynkinType::C;
    case 'D':
    case 'd':
      return DynkinType::D;
    default:
      throw config_error(std::string("unsupported Dynkin type '") + c + "' (supported: A, B, C, D)");
  }
}

namespace {

Vec unit(int dim, int i, Rat c = Rat(1)) {
  Vec v(dim, Rat(0));
  v[i] = c;
  return v;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

RootSystem RootSystem::build(DynkinType type, int rank) {
  if (rank < 3)
    throw config_error("rank " + std::to_string(rank) +
                       " rejected: the definitions assume rank >= 3 (types A1, A2, B2, G2 are excluded)");
  if (type == DynkinType::D && rank < 3) throw config_error("type D requires rank >= 3");

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  const int N = rank;

  // Enumerate roots in the epsilon model and fix the Gram scale of the model.
  std::vector<Vec> simples;
  std::vector<Vec> all;
  switch (type) {
    case DynkinType::A: {
      const int n = N + 1;
      rs.ambient_ = n;
      rs.eps_gram_ = Rat(1);  // (eps_a, eps_i) = delta_ai under tr(xy) on sl_n
      for (int i = 0; i < N; ++i) simples.push_back(vsub(unit(n, i), unit(n, i + 1)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) all.push_back(vsub(unit(n, i), unit(n, j)));
      break;
    }
    case DynkinType::B: {
      rs.ambient_ = N;
      rs.eps_gram_ = Rat(1, 2);  // tr form of the defining rep of so_{2N+1}
      for (int i = 0; i + 1 < N; ++i) simples.push_back(vsub(unit(N, i), unit(N, i + 1)));
      simples.push_back(unit(N, N - 1));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (i == j) continue;
          all.push_back(vsub(unit(N, i), unit(N, j)));
          if (i < j) {
            all.push_back(vadd(unit(N, i), unit(N, j)));
            all.push_back(vsub(Vec(N, Rat(0)), vadd(unit(N, i), unit(N, j))));
          }
        }
      for (int i = 0; i < N; ++i) {
        all.push_back(unit(N, i));
        all.push_back(unit(N, i, Rat(-1)));
      }
      break;
    }
    case DynkinType::C: {
      rs.ambient_ = N;
      rs.eps_gram_ = Rat(1, 2);  // tr form of the defining rep of sp_{2N}
      for (int i = 0; i + 1 < N; ++i) simples.push_back(vsub(unit(N, i), unit(N, i + 1)));
      simples.push_back(unit(N, N - 1, Rat(2)));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (i == j) continue;
          all.push_back(vsub(unit(N, i), unit(N, j)));
          if (i < j) {
            all.push_back(vadd(unit(N, i), unit(N, j)));
            all.push_back(vsub(Vec(N, Rat(0)), vadd(unit(N, i), unit(N, j))));
          }
        }
      for (int i = 0; i < N; ++i) {
        all.push_back(unit(N, i, Rat(2)));
        all.push_back(unit(N, i, Rat(-2)));
      }
      break;
    }
    case DynkinType::D: {
      rs.ambient_ = N;
      rs.eps_gram_ = Rat(1, 2);  // tr form of the defining rep of so_{2N}
      for (int i = 0; i + 1 < N; ++i) simples.push_back(vsub(unit(N, i), unit(N, i + 1)));
      simples.push_back(vadd(unit(N, N - 2), unit(N, N - 1)));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (i == j) continue;
          all.push_back(vsub(unit(N, i), unit(N, j)));
          if (i < j) {
            all.push_back(vadd(unit(N, i), unit(N, j)));
            all.push_back(vsub(Vec(N, Rat(0)), vadd(unit(N, i), unit(N, j))));
          }
        }
      break;
    }
  }

  // Express every root in simple-root coordinates (exact integer solve).
  // Build the matrix S with columns = simple roots and solve S x = root.
  auto solve_coords = [&](const Vec& v) -> std::vector<long> {
    // Gaussian elimination over Q on an ambient x (rank+1) augmented system.
    const int m = rs.ambient_;
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(N + 1, Rat(0)));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < N; ++c) M[r][c] = simples[c][r];
      M[r][N] = v[r];
    }
    int row = 0;
    std::vector<int> pivot_col(N, -1);
    for (int col = 0; col < N && row < m; ++col) {
      int p = -1;
      for (int r = row; r < m; ++r)
        if (M[r][col] != 0) {
          p = r;
          break;
        }
      if (p == -1) continue;
      std::swap(M[p], M[row]);
      Rat inv = M[row][col];
      for (int c = col; c <= N; ++c) M[row][c] /= inv;
      for (int r = 0; r < m; ++r) {
        if (r == row || M[r][col] == 0) continue;
        Rat f = M[r][col];
        for (int c = col; c <= N; ++c) M[r][c] -= f * M[row][c];
      }
      pivot_col[col] = row;
      ++row;
    }
    std::vector<long> out(N, 0);
    for (int col = 0; col < N; ++col) {
      if (pivot_col[col] == -1) continue;
      Rat x = M[pivot_col[col]][N];
      if (x.get_den() != 1) throw internal_error("non-integral simple-root coordinate");
      out[col] = x.get_si();
    }
    return out;
  };

  struct Entry {
    Vec v;
    std::vector<long> coords;
    long height;
  };
  std::vector<Entry> pos, neg;
  for (auto& v : all) {
    auto coords = solve_coords(v);
    long h = 0;
    for (long c : coords) h += c;
    if (h > 0)
      pos.push_back({v, coords, h});
    else
      neg.push_back({v, coords, h});
  }
  auto lex_less = [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords < b.coords;
  };
  std::sort(pos.begin(), pos.end(), lex_less);
  std::sort(neg.begin(), neg.end(), lex_less);
  std::reverse(neg.begin(), neg.end());  // mirror order: neg[i] = -pos[i]

  rs.num_positive_ = static_cast<int>(pos.size());
  for (auto& e : pos) {
    rs.roots_.push_back(e.v);
    rs.simple_coords_.push_back(e.coords);
  }
  // Force exact mirroring so negative_of is index arithmetic.
  for (int i = 0; i < rs.num_positive_; ++i) {
    Vec nv = vsub(Vec(rs.ambient_, Rat(0)), rs.roots_[i]);
    rs.roots_.push_back(nv);
    std::vector<long> nc = rs.simple_coords_[i];
    for (auto& c : nc) c = -c;
    rs.simple_coords_.push_back(nc);
  }

  rs.simple_idx_.resize(N);
  for (int i = 0; i < N; ++i) {
    int idx = rs.root_index(simples[i]);
    if (idx < 0) throw internal_error("simple root missing from enumeration");
    rs.simple_idx_[i] = idx;
  }
  rs.theta_idx_ = rs.num_positive_ - 1;  // maximal in (height, lex) order
  // Highest-root sanity: theta + a_i is never a root.
  for (int i = 0; i < N; ++i)
    if (rs.is_root(vadd(rs.theta(), rs.simple_root(i)))) throw internal_error("theta is not highest");

  // Cartan matrix, symmetrizers, affine row.
  rs.cartan_.assign(N, std::vector<long>(N, 0));
  rs.d_.resize(N);
  for (int i = 0; i < N; ++i) {
    Rat aii = rs.pairing(simples[i], simples[i]);
    rs.d_[i] = aii / 2;
    for (int j = 0; j < N; ++j) {
      Rat val = 2 * rs.pairing(simples[i], simples[j]) / aii;
      if (val.get_den() != 1) throw internal_error("non-integral Cartan entry");
      rs.cartan_[i][j] = val.get_si();
    }
  }
  rs.d0_ = rs.pairing(rs.theta(), rs.theta()) / 2;
  rs.c0_.resize(N);
  rs.cj0_.resize(N);
  Vec mtheta = vsub(Vec(rs.ambient_, Rat(0)), rs.theta());
  for (int j = 0; j < N; ++j) {
    Rat c0j = 2 * rs.pairing(mtheta, simples[j]) / rs.pairing(simples[j], simples[j]);
    Rat cj0 = 2 * rs.pairing(simples[j], mtheta) / rs.pairing(rs.theta(), rs.theta());
    if (c0j.get_den() != 1 || cj0.get_den() != 1) throw internal_error("non-integral affine Cartan entry");
    rs.c0_[j] = c0j.get_si();
    rs.cj0_[j] = cj0.get_si();
  }
  // (d_i c_ij) symmetric, including the affine row.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (rs.d_[i] * rs.cartan_[i][j] != rs.d_[j] * rs.cartan_[j][i])
        throw internal_error("symmetrized Cartan matrix is not symmetric");
  for (int j = 0; j < N; ++j)
    if (rs.d0_ * rs.c0_[j] != rs.d_[j] * rs.cj0_[j]) throw internal_error("affine symmetrizer mismatch");

  if (type != DynkinType::A) rs.special_node();  // asserts uniqueness
  return rs;
}

int RootSystem::negative_of(int idx) const {
  return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
}

int RootSystem::root_index(const Vec& v) const {
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i)
    if (roots_[i] == v) return i;
  return -1;
}

long RootSystem::height(int idx) const {
  long h = 0;
  for (long c : simple_coords_[idx]) h += c;
  return h;
}

int RootSystem::special_node() const {
  if (type_ == DynkinType::A)
    throw config_error("type A has no unique special node (the extending vertex attaches twice)");
  int k = -1;
  for (int j = 0; j < rank_; ++j)
    if (c0_[j] != 0) {
      if (k != -1) throw internal_error("extended node attaches to more than one vertex");
      k = j;
    }
  if (k == -1) throw internal_error("extended node attaches to no vertex");
  return k;
}

Rat RootSystem::pairing(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != ambient_ || static_cast<int>(y.size()) != ambient_)
    throw internal_error("pairing: dimension mismatch");
  Rat s(0);
  for (int i = 0; i < ambient_; ++i) s += x[i] * y[i];
  return s * eps_gram_;
}

std::vector<long> RootSystem::root_string(int alpha_idx, int beta_idx) const {
  std::vector<long> ms;
  const Vec& a = roots_[alpha_idx];
  const Vec& b = roots_[beta_idx];
  for (long m = -8; m <= 8; ++m) {
    Vec v(b);
    for (size_t i = 0; i < v.size(); ++i) v[i] += m * a[i];
    if (is_root(v)) ms.push_back(m);
  }
  return ms;
}

Vec RootSystem::simple_reflection(int i, const Vec& x) const {
  const Vec& a = simple_root(i);
  Rat c = 2 * pairing(x, a) / pairing(a, a);
  Vec r(x);
  for (size_t t = 0; t < r.size(); ++t) r[t] -= c * a[t];
  return r;
}

std::string RootSystem::to_json() const {
  std::ostringstream os;
  os << "{\"type\":\"" << static_cast<char>(type_) << "\",\"rank\":" << rank_ << ",\"cartan\":[";
  for (int i = 0; i < rank_; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < rank_; ++j) os << (j ? "," : "") << cartan_[i][j];
    os << "]";
  }
  os << "],\"affine_row\":[";
  for (int j = 0; j < rank_; ++j) os << (j ? "," : "") << c0_[j];
  os << "],\"d0\":\"" << rat_str(d0_) << "\",\"roots\":[";
  for (size_t r = 0; r < roots_.size(); ++r) {
    os << (r ? "," : "") << "[";
    for (int c = 0; c < ambient_; ++c) os << (c ? "," : "") << "\"" << rat_str(roots_[r][c]) << "\"";
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace ddca
