#pragma once

#include <map>
#include <optional>
#include <string>

#include "kunneth/bv.hpp"

namespace kunneth {

/// Normalized chain complex of the diagonal in arity k, split by internal degree q.
/// Level p holds the degrees q <= degree_bound(p).  Boundaries are the alternating
/// face sums; ∂∘∂ = 0 is verified when the complex is built.
class DiagComplex {
 public:
  /// Levels 0..p_max; level p keeps degrees q <= bounds[p] (bounds must not increase).
  DiagComplex(const Diagonal& diag, int k, std::vector<int> bounds, bool normalized = true, int threads = 1);
  /// The complex keeps a pointer to the diagonal, so temporaries are rejected.
  DiagComplex(Diagonal&&, int, std::vector<int>, bool = true, int = 1) = delete;

  const Diagonal& diagonal() const { return *diag_; }
  int arity() const { return k_; }
  int p_max() const { return static_cast<int>(levels_.size()) - 1; }
  int degree_bound(int p) const { return bounds_[p]; }
  const DiagLevel& level(int p) const { return levels_[p]; }
  /// 0 outside the truncation.
  std::size_t dim(int p, int q) const;
  /// ∂ : C_{p,q} -> C_{p-1,q}, for 1 <= p <= p_max and q <= degree_bound(p).
  const SparseMatrix& boundary(int p, int q) const;
  std::size_t boundary_rank(int p, int q) const;

 private:
  const Diagonal* diag_;
  int k_;
  std::vector<int> bounds_;
  std::vector<DiagLevel> levels_;
  std::map<std::pair<int, int>, SparseMatrix> boundaries_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

/// Degree bounds used for E² up to total degree d_max: level 0 up to d_max,
/// level p >= 1 up to d_max + 1 - p, levels 0..d_max+1.
std::vector<int> e2_bounds(int d_max);

struct E2Table {
  int k = 0;
  int p_max = 0;
  int d_max = 0;
  std::string left, right;
  std::map<std::pair<int, int>, std::size_t> entries;     // (p, q) -> dim E²_{p,q}, p + q <= d_max
  std::map<std::pair<int, int>, std::size_t> chain_dims;  // (p, q) -> dim C_{p,q}, same range
  bool collapse_assumed = true;
};

struct BettiTable {
  int k = 0;
  std::vector<std::size_t> betti;  // index = total degree
  /// (d, cycle type "2,1") -> character value on the degree-d Betti space.
  std::map<std::pair<int, std::string>, Scalar> characters;
  bool collapse_assumed = true;
};

E2Table e2_page(const DiagComplex& complex, int d_max);
E2Table e2_page(const Diagonal& diag, int k, int d_max, int threads = 1);

/// Totals over p + q = d.  Over the rationals the spectral sequence collapses at E²,
/// so these are the Betti numbers; the flag records that this is assumed, not checked.
BettiTable betti(const E2Table& table);

/// Chain-level Hopf trace: for each q, sum over p of (-1)^p trace(sigma on C_{p,q}),
/// over the levels that contain degree q.
std::map<int, Scalar> character(const DiagComplex& complex, const Permutation& sigma);

/// trace(sigma on E²_{p,q}) for p + q <= d_max, from fixed-subspace dimensions of the
/// subgroups generated by powers of sigma.
std::map<std::pair<int, int>, Scalar> homology_character(const DiagComplex& complex, const Permutation& sigma,
                                                        int d_max);

/// Cycle type as "3,1,1"; "()" for the empty permutation.
std::string cycle_type_label(const std::vector<int>& type);
/// One permutation per conjugacy class of Sigma_k, cycles on consecutive points,
/// classes ordered by cycle type (decreasing partitions, largest first).
std::vector<Permutation> class_representatives(int k);

/// Fills `characters` with one value per (degree, conjugacy class of Sigma_k).
void add_characters(BettiTable& table, const DiagComplex& complex, int d_max);

/// Runs fn(0..n-1) on up to `threads` worker threads; rethrows the first exception.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace kunneth
