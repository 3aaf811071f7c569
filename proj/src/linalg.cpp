#include "kunneth/linalg.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

namespace kunneth {

void canonicalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    int idx = v[i].first;
    Scalar sum = v[i].second;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == idx; ++j) sum += v[j].second;
    if (sum != 0) v[out++] = {idx, std::move(sum)};
    i = j;
  }
  v.resize(out);
}

void axpy(SparseVec& out, const Scalar& coeff, const SparseVec& v) {
  if (coeff == 0) return;
  for (const auto& [i, c] : v) out.emplace_back(i, coeff * c);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols) {
  for (auto& t : entries) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("SparseMatrix: triplet index out of range");
    cols_[t.col].emplace_back(static_cast<int>(t.row), std::move(t.value));
  }
  for (auto& c : cols_) canonicalize(c);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<SparseVec> columns)
    : rows_(rows), cols_(std::move(columns)) {
  for (auto& c : cols_) {
    canonicalize(c);
    if (!c.empty() && (c.front().first < 0 || static_cast<std::size_t>(c.back().first) >= rows_))
      throw std::out_of_range("SparseMatrix: row index out of range");
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(static_cast<int>(i), Scalar(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) t.push_back({i, j, rows[i][j]});
  return SparseMatrix(r, c, std::move(t));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), static_cast<int>(r),
                             [](const auto& e, int v) { return e.first < v; });
  if (it != col.end() && it->first == static_cast<int>(r)) return it->second;
  return 0;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVec> t(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, v] : cols_[j]) t[i].emplace_back(static_cast<int>(j), v);
  return SparseMatrix(cols_.size(), std::move(t));
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_.size(), 0));
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, v] : cols_[j]) d[i][j] = v;
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  std::vector<SparseVec> out(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    SparseVec acc;
    for (const auto& [k, v] : b.col(j)) axpy(acc, v, a.col(k));
    canonicalize(acc);
    out[j] = std::move(acc);
  }
  return SparseMatrix(a.rows(), std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("SparseMatrix sum: shape mismatch");
  std::vector<SparseVec> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    out[j] = a.col(j);
    out[j].insert(out[j].end(), b.col(j).begin(), b.col(j).end());
  }
  return SparseMatrix(a.rows(), std::move(out));
}

SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
  std::vector<SparseVec> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) axpy(out[j], s, a.col(j));
  return SparseMatrix(a.rows(), std::move(out));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

namespace {

// row := row - factor * pivot, tracking which columns appeared or vanished.
void eliminate_row(SparseVec& row, const Scalar& factor, const SparseVec& pivot, int row_id,
                   std::vector<std::unordered_set<int>>& col_rows, std::vector<int>& touched) {
  SparseVec merged;
  merged.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      merged.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      int c = pivot[j].first;
      merged.emplace_back(c, -factor * pivot[j].second);
      col_rows[c].insert(row_id);
      touched.push_back(c);
      ++j;
    } else {
      int c = row[i].first;
      Scalar v = row[i].second - factor * pivot[j].second;
      if (v != 0) {
        merged.emplace_back(c, std::move(v));
      } else {
        col_rows[c].erase(row_id);
        touched.push_back(c);
      }
      ++i;
      ++j;
    }
  }
  row = std::move(merged);
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  if (m.nnz() == 0) return 0;
  // Work on rows of m (columns of the transpose).
  SparseMatrix t = m.transpose();
  std::size_t nrows = t.cols();
  std::size_t ncols = m.cols();
  std::vector<SparseVec> rows(nrows);
  std::vector<std::unordered_set<int>> col_rows(ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    rows[r] = t.col(r);
    for (const auto& e : rows[r]) col_rows[e.first].insert(static_cast<int>(r));
  }
  using Entry = std::pair<std::size_t, int>;  // (count, col)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!col_rows[c].empty()) queue.emplace(col_rows[c].size(), static_cast<int>(c));
  std::vector<char> done(ncols, 0);
  std::size_t r = 0;
  std::vector<int> touched;
  while (!queue.empty()) {
    auto [count, c] = queue.top();
    queue.pop();
    if (done[c] || count != col_rows[c].size() || count == 0) continue;
    // Pivot row: shortest row in this column.
    int pivot = -1;
    for (int cand : col_rows[c])
      if (pivot < 0 || rows[cand].size() < rows[pivot].size() ||
          (rows[cand].size() == rows[pivot].size() && cand < pivot))
        pivot = cand;
    const SparseVec piv = std::move(rows[pivot]);
    rows[pivot].clear();
    for (const auto& e : piv) {
      col_rows[e.first].erase(pivot);
      touched.push_back(e.first);
    }
    auto pit = std::lower_bound(piv.begin(), piv.end(), c, [](const auto& e, int v) { return e.first < v; });
    const Scalar pivot_value = pit->second;
    std::vector<int> others(col_rows[c].begin(), col_rows[c].end());
    std::sort(others.begin(), others.end());
    for (int other : others) {
      auto& row = rows[other];
      auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int v) { return e.first < v; });
      Scalar factor = it->second / pivot_value;
      eliminate_row(row, factor, piv, other, col_rows, touched);
    }
    done[c] = 1;
    ++r;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int tc : touched)
      if (!done[tc] && !col_rows[tc].empty()) queue.emplace(col_rows[tc].size(), tc);
    touched.clear();
  }
  return r;
}

std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

std::size_t homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw NotAComplex("homology_dim: d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                      std::to_string(d_out.cols()) + " columns");
  if (!(d_out * d_in).is_zero()) throw NotAComplex("homology_dim: d_out * d_in != 0");
  return kernel_dim(d_out) - rank(d_in);
}

}  // namespace kunneth
