#include "support.hpp"

#include <algorithm>
#include <map>

namespace kunneth::testing {

std::size_t dense_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Scalar f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::size_t> product_of_linear(int first, int last) {
  std::vector<std::size_t> poly{1};
  for (int i = first; i <= last; ++i) {
    std::vector<std::size_t> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += poly[d] * static_cast<std::size_t>(i);
    }
    poly = std::move(next);
  }
  return poly;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::size_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
  return b;
}

// Chains of `layers` Ass morphisms out of [a] followed by an element of Ass(target).
std::size_t ass_chain_count(int layers, int a) {
  if (layers == 0) return a == 0 ? 1 : factorial(a);
  std::size_t total = 0;
  for (int b = a == 0 ? 0 : 1; b <= a; ++b) {
    std::size_t here = a == 0 ? 1 : ass_morphism_count(a, b);
    total += here * ass_chain_count(layers - 1, b);
  }
  return total;
}

std::size_t ass_bar_chain_count(int layers, int a, bool normalized, bool first) {
  if (layers == 0) return a == 0 ? 1 : factorial(a);
  std::size_t total = 0;
  for (int b = a == 0 ? 0 : 1; b <= a; ++b) {
    std::size_t here = a == 0 ? 1 : ass_morphism_count(a, b);
    if (normalized && !first && a == b) here -= 1;  // drop the identity
    total += here * ass_bar_chain_count(layers - 1, b, normalized, false);
  }
  return total;
}

using Poly = std::vector<Scalar>;  // coefficient of q^i at index i

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  return n > 1 ? -result : result;
}

// Monic irreducible polynomials of degree j over F_q, as a polynomial in q.
Poly irreducible_count(int j, bool plane) {
  Poly p(j + 1, Scalar(0));
  for (int d = 1; d <= j; ++d)
    if (j % d == 0) p[j / d] += Scalar(mobius(d), j);
  if (!plane && j == 1) p[0] -= 1;  // exclude f = x
  return p;
}

}  // namespace

std::vector<std::size_t> arnold_betti(int k) { return k <= 1 ? std::vector<std::size_t>{1} : product_of_linear(1, k - 1); }

std::vector<std::size_t> cylinder_betti(int k) { return product_of_linear(1, k); }

std::size_t stirling_first(int n, int cycles) {
  std::vector<std::vector<std::size_t>> c(n + 1, std::vector<std::size_t>(n + 1, 0));
  c[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + static_cast<std::size_t>(i - 1) * c[i - 1][j];
  return cycles < 0 || cycles > n ? 0 : c[n][cycles];
}

std::size_t ass_morphism_count(int a, int b) {
  if (a == 0 || b == 0) return a == b ? 1 : 0;
  return factorial(a) * binomial(a - 1, b - 1);
}

std::size_t ass_bar_count(int p, int k, bool normalized) { return ass_bar_chain_count(p + 1, k, normalized, true); }

std::size_t ass_diag_count(int p, int k) {
  if (k == 0) return 1;
  std::size_t total = 0;
  for (int n = 1; n <= k; ++n) {
    std::size_t splits = 0;
    for (int l = 1; l <= n; ++l)
      if (n % l == 0) splits += ass_chain_count(p, l) * ass_chain_count(p, n / l);
    total += ass_morphism_count(k, n) * splits;
  }
  return total;
}

std::vector<Scalar> squarefree_character(const std::vector<int>& type, bool plane) {
  int k = 0;
  std::map<int, int> mult;
  for (int part : type) {
    k += part;
    ++mult[part];
  }
  Poly total{Scalar(1)};
  Scalar z = 1;
  for (const auto& [j, m] : mult) {
    Poly irr = irreducible_count(j, plane);
    // binomial(irr, m) = irr (irr - 1) ... (irr - m + 1) / m!
    Poly choose{Scalar(1)};
    for (int r = 0; r < m; ++r) {
      Poly factor = irr;
      factor[0] -= r;
      choose = poly_mul(choose, factor);
    }
    for (auto& c : choose) c /= Scalar(static_cast<long>(factorial(m)));
    total = poly_mul(total, choose);
    for (int r = 0; r < m; ++r) z *= j;
    z *= Scalar(static_cast<long>(factorial(m)));
  }
  total.resize(k + 1, Scalar(0));
  std::vector<Scalar> traces(k + 1);
  for (int i = 0; i <= k; ++i) traces[i] = (i % 2 ? -1 : 1) * z * total[k - i];
  return traces;
}

std::vector<int> interval_compose(const std::vector<int>& a, int i, const std::vector<int>& b) {
  // Intervals of a sit left to right in the order a lists them; interval i is
  // subdivided into the intervals of b in b's order.
  std::vector<int> out;
  const int m = static_cast<int>(b.size());
  for (int letter : a) {
    if (letter < i) out.push_back(letter);
    else if (letter > i) out.push_back(letter + m - 1);
    else
      for (int x : b) out.push_back(x + i - 1);
  }
  return out;
}

std::vector<int> cyclic_insert(const std::vector<int>& cyc, int slot, const std::vector<int>& w) {
  std::vector<int> out = interval_compose(cyc, slot, w);
  std::rotate(out.begin(), std::find(out.begin(), out.end(), 1), out.end());
  return out;
}

namespace {

SparseMatrix bar_face_matrix(const RightModule& m, const BarLevel& src, const BarLevel& tgt, int i) {
  std::vector<SparseVec> cols;
  for (const auto& w : src.words()) {
    SparseVec col;
    for (auto& [c, coeff] : bar_face(m, w, i)) col.emplace_back(tgt.index_of(c), coeff);
    canonicalize(col);
    cols.push_back(std::move(col));
  }
  return SparseMatrix(tgt.size(), std::move(cols));
}

SparseMatrix bar_degeneracy_matrix(const BarLevel& src, const BarLevel& tgt, int i) {
  std::vector<SparseVec> cols;
  for (const auto& w : src.words()) cols.push_back({{tgt.index_of(bar_degeneracy(w, i)), Scalar(1)}});
  return SparseMatrix(tgt.size(), std::move(cols));
}

bool equal(const SparseMatrix& a, const SparseMatrix& b) { return a == b; }

std::string where(const char* what, int p, int i, int j) {
  return std::string(what) + " at level " + std::to_string(p) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
}

// Checks the simplicial identities given face and degeneracy matrices per level.
template <class Face, class Degen>
std::vector<std::string> identity_failures(int p_max, Face face, Degen degen) {
  std::vector<std::string> out;
  for (int p = 2; p <= p_max; ++p)
    for (int j = 1; j <= p; ++j)
      for (int i = 0; i < j; ++i)
        if (!equal(face(p - 1, i) * face(p, j), face(p - 1, j - 1) * face(p, i)))
          out.push_back(where("d_i d_j != d_{j-1} d_i", p, i, j));
  for (int p = 0; p + 1 <= p_max; ++p)
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= p + 1; ++i) {
        SparseMatrix lhs = face(p + 1, i) * degen(p, j);
        SparseMatrix rhs;
        if (i < j) rhs = degen(p - 1, j - 1) * face(p, i);
        else if (i == j || i == j + 1) rhs = SparseMatrix::identity(lhs.cols());
        else rhs = degen(p - 1, j) * face(p, i - 1);
        if (!equal(lhs, rhs)) out.push_back(where("d_i s_j", p, i, j));
      }
  return out;
}

}  // namespace

std::vector<std::string> diagonal_identity_failures(const Diagonal& diag, int k, int p_max, int d) {
  std::vector<DiagLevel> levels;
  for (int p = 0; p <= p_max; ++p) levels.emplace_back(diag, p, k, false, d);
  auto face = [&](int p, int i) { return diag_face_matrix(diag, levels[p], levels[p - 1], i); };
  auto degen = [&](int p, int j) { return diag_degeneracy_matrix(diag, levels[p], levels[p + 1], j); };
  return identity_failures(p_max, face, degen);
}

std::vector<std::string> bar_identity_failures(const RightModule& m, int k, int p_max) {
  std::vector<BarLevel> levels;
  for (int p = 0; p <= p_max; ++p) levels.emplace_back(m, p, k, false);
  auto face = [&](int p, int i) { return bar_face_matrix(m, levels[p], levels[p - 1], i); };
  auto degen = [&](int p, int j) { return bar_degeneracy_matrix(levels[p], levels[p + 1], j); };
  return identity_failures(p_max, face, degen);
}

namespace {

// The action of sigma on a whole level, assembled from its degree blocks.
SparseMatrix level_sigma(const Diagonal& diag, const DiagLevel& level, const Permutation& sigma) {
  std::vector<SparseVec> cols(level.size());
  int top = level.size() ? level.degree(level.size() - 1) : 0;
  for (int q = 0; q <= top; ++q) {
    auto [b, e] = level.degree_range(q);
    if (b == e) continue;
    SparseMatrix block = diag_sigma_matrix(diag, level, sigma, q);
    for (std::size_t j = 0; j < block.cols(); ++j)
      for (const auto& [r, c] : block.col(j)) cols[b + j].emplace_back(r + static_cast<int>(b), c);
  }
  return SparseMatrix(level.size(), std::move(cols));
}

}  // namespace

std::vector<std::string> diagonal_equivariance_failures(const Diagonal& diag, int k, int p_max, int d) {
  std::vector<std::string> out;
  std::vector<DiagLevel> levels;
  for (int p = 0; p <= p_max; ++p) levels.emplace_back(diag, p, k, false, d);
  for (const auto& sigma : all_permutations(k)) {
    std::vector<SparseMatrix> act;
    for (const auto& l : levels) act.push_back(level_sigma(diag, l, sigma));
    for (int p = 1; p <= p_max; ++p)
      for (int i = 0; i <= p; ++i) {
        SparseMatrix f = diag_face_matrix(diag, levels[p], levels[p - 1], i);
        if (!(act[p - 1] * f == f * act[p]))
          out.push_back("face d_" + std::to_string(i) + " at level " + std::to_string(p) + " not equivariant under " +
                        one_line(sigma));
      }
  }
  return out;
}

std::vector<std::string> bar_acyclicity_failures(const RightModule& m, int k, int p_max) {
  std::vector<std::string> out;
  std::vector<BarLevel> levels;
  for (int p = 0; p <= p_max; ++p) levels.emplace_back(m, p, k, true);
  SparseMatrix aug = augmentation_matrix(m, levels[0]);
  std::size_t aug_rank = rank(aug);
  if (aug_rank != m.component(k).dim())
    out.push_back("H_0 of the bar complex differs from M(" + std::to_string(k) + ")");
  std::vector<std::size_t> ranks(p_max + 2, 0);
  ranks[0] = aug_rank;
  for (int p = 1; p <= p_max; ++p) ranks[p] = rank(bar_differential(m, levels[p], levels[p - 1]));
  for (int p = 0; p < p_max; ++p)
    if (levels[p].size() - ranks[p] != ranks[p + 1])
      out.push_back("bar homology nonzero at p=" + std::to_string(p) + ", k=" + std::to_string(k));
  return out;
}

}  // namespace kunneth::testing
