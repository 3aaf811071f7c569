#include "kunneth/graded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kunneth {

bool is_permutation(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(std::span<const int> perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

Permutation compose(std::span<const int> tau, std::span<const int> sigma) {
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = tau[sigma[i]];
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> cycle_type(std::span<const int> perm) {
  std::vector<int> type;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int order(std::span<const int> perm) {
  int o = 1;
  for (int len : cycle_type(perm)) o = std::lcm(o, len);
  return o;
}

std::string one_line(std::span<const int> perm) {
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(perm[i] + 1);
  }
  return s;
}

Permutation parse_one_line(const std::string& text) {
  std::istringstream in(text);
  Permutation p;
  int v;
  while (in >> v) p.push_back(v - 1);
  if (!in.eof() || !is_permutation(p)) throw std::invalid_argument("not a permutation in one-line notation: '" + text + "'");
  return p;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (degrees[i] % 2 == 0) continue;
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && degrees[j] % 2 != 0) parity ^= 1;
  }
  return parity ? -1 : 1;
}

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree < 0) throw std::invalid_argument("negative degree for basis element " + basis_[i].label);
    if (!index_.emplace(basis_[i].label, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate basis label " + basis_[i].label);
  }
}

int GradedSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::size_t> GradedSpace::dims_by_degree() const {
  std::vector<std::size_t> dims;
  for (const auto& b : basis_) {
    if (dims.size() <= static_cast<std::size_t>(b.degree)) dims.resize(b.degree + 1, 0);
    ++dims[b.degree];
  }
  return dims;
}

GradedSpace tensor(const std::vector<GradedSpace>& spaces) {
  std::vector<BasisElement> basis;
  std::vector<std::vector<int>> indices;
  std::vector<int> cur(spaces.size(), 0);
  bool empty = std::any_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.dim() == 0; });
  if (spaces.empty()) {
    basis.push_back({"1", 0});
    indices.emplace_back();
  } else if (!empty) {
    while (true) {
      BasisElement b{"", 0};
      for (std::size_t f = 0; f < spaces.size(); ++f) {
        if (f) b.label += "⊗";
        b.label += spaces[f][cur[f]].label;
        b.degree += spaces[f][cur[f]].degree;
      }
      basis.push_back(std::move(b));
      indices.push_back(cur);
      int f = static_cast<int>(spaces.size()) - 1;
      while (f >= 0 && ++cur[f] == static_cast<int>(spaces[f].dim())) cur[f--] = 0;
      if (f < 0) break;
    }
  }
  GradedSpace t(std::move(basis));
  t.factors_ = spaces;
  t.factor_indices_ = std::move(indices);
  return t;
}

GradedMap::GradedMap(std::shared_ptr<const GradedSpace> source, std::shared_ptr<const GradedSpace> target,
                     SparseMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->dim() || matrix_.cols() != source_->dim())
    throw std::invalid_argument("GradedMap: matrix shape does not match spaces");
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    for (const auto& [i, v] : matrix_.col(j))
      if (target_->degree(i) != source_->degree(j))
        throw std::invalid_argument("GradedMap: entry connects " + (*source_)[j].label + " and " +
                                    (*target_)[i].label + " of different degrees");
}

GradedMap permute_factors(const GradedSpace& t, std::span<const int> perm) {
  if (!t.is_tensor()) throw std::invalid_argument("permute_factors: space is not a tensor product");
  if (perm.size() != t.factors().size() || !is_permutation(perm))
    throw std::invalid_argument("permute_factors: bad permutation");
  std::vector<GradedSpace> permuted(t.factors().size());
  for (std::size_t i = 0; i < perm.size(); ++i) permuted[perm[i]] = t.factors()[i];
  auto target = std::make_shared<const GradedSpace>(tensor(permuted));
  auto source = std::make_shared<const GradedSpace>(t);
  std::vector<Triplet> entries;
  std::vector<int> degrees(perm.size());
  for (std::size_t j = 0; j < t.dim(); ++j) {
    const auto& idx = t.factor_indices(j);
    std::vector<int> moved(idx.size());
    for (std::size_t f = 0; f < idx.size(); ++f) {
      moved[perm[f]] = idx[f];
      degrees[f] = t.factors()[f].degree(idx[f]);
    }
    // Lexicographic position of `moved` in the permuted tensor.
    std::size_t row = 0;
    for (std::size_t f = 0; f < moved.size(); ++f) row = row * permuted[f].dim() + moved[f];
    entries.push_back({row, j, Scalar(koszul_sign(perm, degrees))});
  }
  return GradedMap(source, target, SparseMatrix(target->dim(), t.dim(), std::move(entries)));
}

}  // namespace kunneth
