#include "kunneth/operads.hpp"

namespace kunneth {

namespace {
std::string word_label(const Permutation& w) {
  std::string s = "[";
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(w[t] + 1);
  }
  return s + "]";
}
}  // namespace

AssOperad::AssOperad(int max_arity) : Operad("Ass", max_arity) {
  for (int n = 1; n <= max_arity; ++n) {
    words_.push_back(all_permutations(n));
    std::vector<BasisElement> basis;
    for (const auto& w : words_.back()) basis.push_back({word_label(w), 0});
    components_.emplace_back(std::move(basis));
  }
}

const GradedSpace& AssOperad::component(int n) const {
  check_arity(n);
  return components_[n - 1];
}

int AssOperad::index_of(std::span<const int> word) const {
  // Lexicographic rank via the Lehmer code.
  int n = static_cast<int>(word.size());
  int rank = 0;
  for (int t = 0; t < n; ++t) {
    int smaller = 0;
    for (int u = t + 1; u < n; ++u) smaller += word[u] < word[t];
    rank = rank * (n - t) + smaller;
  }
  return rank;
}

SparseVec AssOperad::relabel(int n, std::span<const int> perm, int a) const {
  check_arity(n);
  Permutation w = words_[n - 1].at(a);
  for (int& x : w) x = perm[x];
  return {{index_of(w), Scalar(1)}};
}

SparseVec AssOperad::compose(int n, int i, int m, int a, int b) const {
  check_arity(n);
  check_arity(m);
  check_arity(n + m - 1);
  const auto& w = words_[n - 1].at(a);
  const auto& v = words_[m - 1].at(b);
  Permutation out;
  out.reserve(n + m - 1);
  for (int x : w) {
    if (x < i) {
      out.push_back(x);
    } else if (x > i) {
      out.push_back(x + m - 1);
    } else {
      for (int y : v) out.push_back(y + i);
    }
  }
  return {{index_of(out), Scalar(1)}};
}

}  // namespace kunneth
