#include "kunneth/bar.hpp"

#include <functional>

namespace kunneth {

int chain_degree(const RightModule& m, const Chain& c) {
  int d = m.degree(c.target_arity(), c.terminal);
  for (const auto& f : c.layers) d += morphism_degree(m.over(), f);
  return d;
}

std::string chain_label(const RightModule& m, const Chain& c) {
  std::string s;
  for (const auto& f : c.layers) s += "(" + morphism_label(m.over(), f) + ") ";
  return s + m.component(c.target_arity())[c.terminal].label;
}

std::vector<int> encode(const Chain& c) {
  std::vector<int> v{c.arity, static_cast<int>(c.layers.size())};
  for (const auto& f : c.layers) {
    v.push_back(f.target());
    v.insert(v.end(), f.map.begin(), f.map.end());
    v.insert(v.end(), f.decorations.begin(), f.decorations.end());
  }
  v.push_back(c.terminal);
  return v;
}

std::size_t IntVectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

ChainCombination chain_face(const RightModule& m, const Chain& c, int position) {
  const int L = static_cast<int>(c.layers.size());
  if (position < 0 || position >= L) throw std::out_of_range("chain_face: bad position");
  ChainCombination out;
  if (position < L - 1) {
    for (auto& [g, coeff] : compose_morphisms(m.over(), c.layers[position], c.layers[position + 1])) {
      Chain d;
      d.arity = c.arity;
      d.terminal = c.terminal;
      d.layers.reserve(L - 1);
      d.layers.insert(d.layers.end(), c.layers.begin(), c.layers.begin() + position);
      d.layers.push_back(std::move(g));
      d.layers.insert(d.layers.end(), c.layers.begin() + position + 2, c.layers.end());
      out.emplace_back(std::move(d), coeff);
    }
    return out;
  }
  SparseVec x = act(m, SparseVec{{c.terminal, Scalar(1)}}, c.layers.back());
  for (auto& [t, coeff] : x) {
    Chain d;
    d.arity = c.arity;
    d.layers.assign(c.layers.begin(), c.layers.end() - 1);
    d.terminal = t;
    out.emplace_back(std::move(d), coeff);
  }
  return out;
}

Chain chain_insert_identity(const Chain& c, int position) {
  const int L = static_cast<int>(c.layers.size());
  if (position < 0 || position > L) throw std::out_of_range("chain_insert_identity: bad position");
  int n = position == 0 ? c.arity : c.layers[position - 1].target();
  Chain d = c;
  d.layers.insert(d.layers.begin() + position, identity_morphism(n));
  return d;
}

std::vector<Chain> chains(const RightModule& m, int k, int layers, int max_degree) {
  std::vector<Chain> out;
  Chain cur;
  cur.arity = k;
  // Minimal degree of the remaining layers is 0, so prune on the running total only.
  std::function<void(int, int, int)> rec = [&](int depth, int n, int deg) {
    if (depth == layers) {
      const auto& mn = m.component(n);
      for (std::size_t x = 0; x < mn.dim(); ++x)
        if (deg + mn.degree(x) <= max_degree) {
          cur.terminal = static_cast<int>(x);
          out.push_back(cur);
        }
      return;
    }
    for (auto& f : morphisms_from(m.over(), n, max_degree - deg)) {
      int d = morphism_degree(m.over(), f);
      int t = f.target();
      cur.layers.push_back(std::move(f));
      rec(depth + 1, t, deg + d);
      cur.layers.pop_back();
    }
  };
  rec(0, k, 0);
  return out;
}

bool is_degenerate(const Chain& w) {
  for (std::size_t j = 1; j < w.layers.size(); ++j)
    if (is_identity(w.layers[j])) return true;
  return false;
}

BarLevel::BarLevel(const RightModule& m, int p, int k, bool normalized, int max_degree)
    : p_(p), k_(k), normalized_(normalized) {
  for (auto& c : chains(m, k, p + 1, max_degree)) {
    if (normalized && is_degenerate(c)) continue;
    index_.emplace(encode(c), static_cast<int>(words_.size()));
    degrees_.push_back(chain_degree(m, c));
    words_.push_back(std::move(c));
  }
}

int BarLevel::index_of(const Chain& c) const {
  auto it = index_.find(encode(c));
  return it == index_.end() ? -1 : it->second;
}

GradedSpace BarLevel::space(const RightModule& m) const {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < words_.size(); ++i) basis.push_back({chain_label(m, words_[i]), degrees_[i]});
  return GradedSpace(std::move(basis));
}

ChainCombination bar_face(const RightModule& m, const Chain& w, int i) { return chain_face(m, w, i); }

Chain bar_degeneracy(const Chain& w, int i) { return chain_insert_identity(w, i + 1); }

SparseVec augmentation(const RightModule& m, const Chain& w) {
  if (w.layers.size() != 1) throw std::invalid_argument("augmentation: expects a level-0 word");
  return act(m, SparseVec{{w.terminal, Scalar(1)}}, w.layers[0]);
}

SparseMatrix bar_differential(const RightModule& m, const BarLevel& source, const BarLevel& target) {
  if (source.level() != target.level() + 1 || source.arity() != target.arity())
    throw std::invalid_argument("bar_differential: levels do not match");
  std::vector<SparseVec> cols(source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Chain& w = source.word(j);
    SparseVec col;
    for (int i = 0; i <= source.level(); ++i) {
      int sign = i % 2 ? -1 : 1;
      for (auto& [c, coeff] : bar_face(m, w, i)) {
        if (target.normalized() && is_degenerate(c)) continue;
        int row = target.index_of(c);
        if (row < 0) throw std::logic_error("bar_differential: face " + chain_label(m, c) + " not in target level");
        col.emplace_back(row, sign * coeff);
      }
    }
    canonicalize(col);
    cols[j] = std::move(col);
  }
  return SparseMatrix(target.size(), std::move(cols));
}

SparseMatrix augmentation_matrix(const RightModule& m, const BarLevel& level0) {
  if (level0.level() != 0) throw std::invalid_argument("augmentation_matrix: expects level 0");
  std::vector<SparseVec> cols;
  for (const auto& w : level0.words()) cols.push_back(augmentation(m, w));
  return SparseMatrix(m.component(level0.arity()).dim(), std::move(cols));
}

}  // namespace kunneth
