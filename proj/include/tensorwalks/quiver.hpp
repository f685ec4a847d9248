#pragma once

// McKay quivers, walk counts by matrix powers and by character sums,
// centralizer dimensions and Bratteli diagrams.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tensorwalks/group.hpp"

namespace tensorwalks {

// Dense square matrix of arbitrary-precision integers.
class WalkMatrix {
 public:
  WalkMatrix() = default;
  explicit WalkMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static WalkMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Count& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Count& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool symmetric() const;
  WalkMatrix transpose() const;

  friend WalkMatrix operator*(const WalkMatrix& x, const WalkMatrix& y);
  friend bool operator==(const WalkMatrix& x, const WalkMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Count> a_;
};

// a_{nu,lam} = <chi_nu chi_V, chi_lam>; throws ConsistencyError if an entry
// is not a nonnegative integer, UnsupportedError for invariant-only groups.
WalkMatrix mckay_adjacency(const GroupData& g, const ModuleChar& v);

WalkMatrix matrix_power(const WalkMatrix& a, unsigned k);
// (A^k)_{from,to} by binary exponentiation.
Count walk_count_matrix(const WalkMatrix& a, unsigned k, std::size_t from, std::size_t to);
// Rows (A^k)_{from,*} for k = 0..K by repeated vector-matrix products.
std::vector<std::vector<Count>> walk_rows(const WalkMatrix& a, std::size_t from, unsigned K);

// (1/|G|) sum_mu |C_mu| chi_from chi_V^k conj(chi_to); invariant-only groups
// accept only from = to = 0.
Count walk_count_character(const GroupData& g, const ModuleChar& v, unsigned k, std::size_t from, std::size_t to);
// Same, for every target at once (FullTable only).
std::vector<Count> walk_counts_character(const GroupData& g, const ModuleChar& v, unsigned k, std::size_t from);
// dim (V^{(x)k})^G; valid on both tiers.
Count invariant_dim(const GroupData& g, const ModuleChar& v, unsigned k);
// dim Z_k(G) = (1/|G|) sum |C_mu| chi_V^{2k}; requires a self-dual module.
Count centralizer_dim(const GroupData& g, const ModuleChar& v, unsigned k);

struct BratteliDiagram {
  std::vector<std::string> labels;            // irrep labels
  std::vector<std::vector<Count>> levels;     // levels[k][lam] = m_k^lam
  WalkMatrix edges;                           // a_{nu,lam}
  std::vector<Count> level_dims;              // sum_lam (m_k^lam)^2
  bool real_module = false;                   // level_dims equal dim Z_k when true
};

BratteliDiagram bratteli(const GroupData& g, const ModuleChar& v, unsigned K);

struct EigenReport {
  bool holds = true;
  std::size_t nu = 0;  // first failing pair when !holds
  std::size_t mu = 0;
};

// sum_lam a_{nu,lam} chi_lam(c_mu) = chi_V(c_mu) chi_nu(c_mu) for all (nu, mu).
EigenReport eigen_check(const GroupData& g, const ModuleChar& v, const WalkMatrix& a);
// sum_lam a_{nu,lam} d_lam = d_nu dim V for all nu.
bool row_dimension_check(const GroupData& g, const ModuleChar& v, const WalkMatrix& a);

struct OrthogonalityReport {
  bool rows = true;     // <chi_nu, chi_lam> = delta
  bool columns = true;  // sum_lam chi_lam(mu) conj chi_lam(mu') = delta |G|/|C_mu|
  bool degrees = true;  // sum d^2 = |G|
  bool class_sizes = true;
};
OrthogonalityReport orthogonality_check(const GroupData& g);

}  // namespace tensorwalks
