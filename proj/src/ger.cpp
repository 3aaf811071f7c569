#include "kunneth/operads.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace kunneth {

namespace {

using Word = GerOperad::Word;
using Forest = GerOperad::Forest;
using GerVec = std::map<Forest, Scalar>;
using TensorVec = std::map<Word, Scalar>;

int forest_degree(const Forest& f) {
  int d = 0;
  for (const auto& b : f) d += static_cast<int>(b.size()) - 1;
  return d;
}

void add(GerVec& v, const Forest& f, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(f, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

void add_all(GerVec& v, const GerVec& w, const Scalar& c) {
  for (const auto& [f, x] : w) add(v, f, c * x);
}

// Sorts blocks by their first letter; returns the Koszul sign for block degrees size-1.
int sort_blocks(Forest& f) {
  int parity = 0;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b)
      if (f[a][0] > f[b][0] && (f[a].size() - 1) % 2 && (f[b].size() - 1) % 2) parity ^= 1;
  std::sort(f.begin(), f.end(), [](const Word& x, const Word& y) { return x[0] < y[0]; });
  return parity ? -1 : 1;
}

GerVec product(const GerVec& x, const GerVec& y) {
  GerVec out;
  for (const auto& [fx, cx] : x)
    for (const auto& [fy, cy] : y) {
      Forest f = fx;
      f.insert(f.end(), fy.begin(), fy.end());
      int s = sort_blocks(f);
      add(out, f, s * cx * cy);
    }
  return out;
}

GerVec single(Forest f) { return GerVec{{std::move(f), Scalar(1)}}; }

// Lie monomials are expanded in the tensor algebra on odd generators, where a
// comb on s letters has odd-parity s and [P, Q] = PQ - (-1)^{pq} QP.
TensorVec tensor_bracket(const TensorVec& p, int p_letters, const TensorVec& q, int q_letters) {
  TensorVec out;
  int sign = (p_letters % 2 && q_letters % 2) ? -1 : 1;
  auto emit = [&](const Word& a, const Word& b, const Scalar& c) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    auto [it, fresh] = out.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) {
      emit(a, b, ca * cb);
      emit(b, a, -sign * ca * cb);
    }
  return out;
}

TensorVec expand_comb(const Word& comb) {
  TensorVec e{{Word{comb[0]}, Scalar(1)}};
  for (std::size_t t = 1; t < comb.size(); ++t)
    e = tensor_bracket(e, static_cast<int>(t), TensorVec{{Word{comb[t]}, Scalar(1)}}, 1);
  return e;
}

// A Lie element is determined by the coefficients of the words starting with its
// smallest letter; those coefficients are its coordinates in the comb basis.
GerVec combs_of(const TensorVec& t) {
  GerVec out;
  if (t.empty()) return out;
  int lowest = *std::min_element(t.begin()->first.begin(), t.begin()->first.end());
  for (const auto& [w, c] : t)
    if (w[0] == lowest) add(out, Forest{w}, c);
  return out;
}

GerVec comb_normal_form(const Word& comb) {
  if (comb[0] == *std::min_element(comb.begin(), comb.end())) return single(Forest{comb});
  return combs_of(expand_comb(comb));
}

GerVec lie_bracket(const Word& a, const Word& b) {
  return combs_of(tensor_bracket(expand_comb(a), static_cast<int>(a.size()), expand_comb(b), static_cast<int>(b.size())));
}

GerVec bracket_forests(const Forest& a, const Forest& b) {
  if (a.size() > 1) {
    // [xy, b] = x[y, b] + (-1)^{|y|(|b|+1)} [x, b] y
    Forest x(a.begin(), a.end() - 1);
    Forest y{a.back()};
    int sign = (forest_degree(y) * (forest_degree(b) + 1)) % 2 ? -1 : 1;
    GerVec out = product(single(x), bracket_forests(y, b));
    add_all(out, product(bracket_forests(x, b), single(y)), Scalar(sign));
    return out;
  }
  if (b.size() > 1) {
    // [a, yz] = [a, y] z + (-1)^{(|a|+1)|y|} y [a, z]
    Forest y(b.begin(), b.end() - 1);
    Forest z{b.back()};
    int sign = ((forest_degree(a) + 1) * forest_degree(y)) % 2 ? -1 : 1;
    GerVec out = product(bracket_forests(a, y), single(z));
    add_all(out, product(single(y), bracket_forests(a, z)), Scalar(sign));
    return out;
  }
  return lie_bracket(a[0], b[0]);
}

GerVec bracket(const GerVec& x, const GerVec& y) {
  GerVec out;
  for (const auto& [fx, cx] : x)
    for (const auto& [fy, cy] : y) add_all(out, bracket_forests(fx, fy), cx * cy);
  return out;
}

std::string forest_label(const Forest& f) {
  std::string s;
  for (const auto& b : f) {
    s += '[';
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(b[t] + 1);
    }
    s += ']';
  }
  return s;
}

std::vector<Forest> enumerate_forests(int n) {
  std::vector<Forest> out;
  std::vector<int> rg(n, 0);
  while (true) {
    int blocks = *std::max_element(rg.begin(), rg.end()) + 1;
    std::vector<Word> parts(blocks);
    for (int t = 0; t < n; ++t) parts[rg[t]].push_back(t);
    // Each block keeps its minimum first and permutes the rest.
    std::vector<Word> cur = parts;
    std::function<void(int)> rec = [&](int k) {
      if (k == blocks) {
        out.push_back(cur);
        return;
      }
      Word tail(parts[k].begin() + 1, parts[k].end());
      do {
        std::copy(tail.begin(), tail.end(), cur[k].begin() + 1);
        rec(k + 1);
      } while (std::next_permutation(tail.begin(), tail.end()));
    };
    rec(0);
    // Next restricted growth string.
    int t = n - 1;
    while (t > 0) {
      int mx = *std::max_element(rg.begin(), rg.begin() + t);
      if (rg[t] <= mx) {
        ++rg[t];
        std::fill(rg.begin() + t + 1, rg.end(), 0);
        break;
      }
      --t;
    }
    if (t <= 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) {
    int da = forest_degree(a), db = forest_degree(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

}  // namespace

GerOperad::GerOperad(int max_arity, std::shared_ptr<const TableCache> cache)
    : Operad("Ger", max_arity), cache_(std::move(cache)) {
  for (int n = 1; n <= max_arity; ++n) {
    forests_.push_back(enumerate_forests(n));
    std::vector<BasisElement> basis;
    std::map<Forest, int> idx;
    for (const auto& f : forests_.back()) {
      idx.emplace(f, static_cast<int>(basis.size()));
      basis.push_back({forest_label(f), forest_degree(f)});
    }
    components_.emplace_back(std::move(basis));
    index_.push_back(std::move(idx));
  }
}

const GradedSpace& GerOperad::component(int n) const {
  check_arity(n);
  return components_[n - 1];
}

int GerOperad::index_of(const Forest& f) const {
  int n = 0;
  for (const auto& b : f) n += static_cast<int>(b.size());
  if (n < 1 || n > max_arity()) return -1;
  auto it = index_[n - 1].find(f);
  return it == index_[n - 1].end() ? -1 : it->second;
}

int GerOperad::product_monomial(int n) const {
  Forest f;
  for (int t = 0; t < n; ++t) f.push_back({t});
  return index_of(f);
}

namespace {
SparseVec to_sparse(const GerOperad& ger, const GerVec& v) {
  SparseVec out;
  for (const auto& [f, c] : v) {
    int idx = ger.index_of(f);
    if (idx < 0) throw std::logic_error("Ger: result " + forest_label(f) + " is not in normal form");
    out.emplace_back(idx, c);
  }
  canonicalize(out);
  return out;
}
}  // namespace

SparseVec GerOperad::bracket(const Forest& x, const Forest& y) const {
  return to_sparse(*this, bracket_forests(x, y));
}

SparseVec GerOperad::product(const Forest& x, const Forest& y) const {
  return to_sparse(*this, kunneth::product(single(x), single(y)));
}

const std::vector<SparseVec>& GerOperad::sigma_table(int n, const Permutation& perm) const {
  {
    std::shared_lock lock(mutex_);
    auto it = sigma_.find({n, perm});
    if (it != sigma_.end()) return *it->second;
  }
  auto table = std::make_unique<std::vector<SparseVec>>();
  for (const auto& f : forests_[n - 1]) {
    // Renaming letters is multiplicative; combs that no longer start with their
    // minimum are rewritten in the comb basis.
    GerVec acc = single(Forest{});
    for (const auto& b : f) {
      Word renamed = b;
      for (int& x : renamed) x = perm[x];
      acc = kunneth::product(acc, comb_normal_form(renamed));
    }
    table->push_back(to_sparse(*this, acc));
  }
  std::unique_lock lock(mutex_);
  auto [it, fresh] = sigma_.emplace(std::make_pair(n, perm), std::move(table));
  return *it->second;
}

SparseVec GerOperad::relabel(int n, std::span<const int> perm, int a) const {
  check_arity(n);
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("Ger relabel: permutation size mismatch");
  return sigma_table(n, Permutation(perm.begin(), perm.end())).at(a);
}

const std::vector<SparseVec>& GerOperad::partial_table(int n, int i, int m) const {
  auto key = std::make_tuple(n, i, m);
  {
    std::shared_lock lock(mutex_);
    auto it = partial_.find(key);
    if (it != partial_.end()) return *it->second;
  }
  std::string cache_key = name() + "|" + table_version() + "|partial|" + std::to_string(n) + "|" +
                          std::to_string(i) + "|" + std::to_string(m);
  std::unique_ptr<std::vector<SparseVec>> table;
  if (cache_) {
    auto hit = cache_->load(cache_key);
    if (hit && hit->size() == forests_[n - 1].size() * forests_[m - 1].size())
      table = std::make_unique<std::vector<SparseVec>>(std::move(*hit));
  }
  if (!table) {
    table = std::make_unique<std::vector<SparseVec>>();
    for (const auto& t : forests_[n - 1])
      for (const auto& s : forests_[m - 1]) {
        auto shift_t = [&](int x) { return x < i ? x : x + m - 1; };
        GerVec inserted;
        {
          Forest shifted = s;
          for (auto& b : shifted)
            for (int& x : b) x += i;
          inserted = single(shifted);
        }
        int passes = 0;  // brackets that S moves across
        bool seen = false;
        GerVec acc = single(Forest{});
        for (const auto& b : t) {
          bool has = std::find(b.begin(), b.end(), i) != b.end();
          if (seen) passes += static_cast<int>(b.size()) - 1;
          if (!has) {
            Word shifted = b;
            for (int& x : shifted) x = shift_t(x);
            acc = kunneth::product(acc, single(Forest{shifted}));
            continue;
          }
          seen = true;
          // Each bracket of the comb whose left argument contains x_i contributes
          // (-1)^{|S|}: the comb brackets are written with the sign of their left argument.
          int t_pos = static_cast<int>(std::find(b.begin(), b.end(), i) - b.begin());
          passes += t_pos == 0 ? static_cast<int>(b.size()) - 1 : static_cast<int>(b.size()) - 1 - t_pos;
          auto leaf = [&](int x) { return x == i ? inserted : single(Forest{Word{shift_t(x)}}); };
          GerVec block = leaf(b[0]);
          for (std::size_t k = 1; k < b.size(); ++k) block = kunneth::bracket(block, leaf(b[k]));
          acc = kunneth::product(acc, block);
        }
        SparseVec col = to_sparse(*this, acc);
        if ((forest_degree(s) * passes) % 2)
          for (auto& e : col) e.second = -e.second;
        table->push_back(std::move(col));
      }
    if (cache_) cache_->store(cache_key, *table);
  }
  std::unique_lock lock(mutex_);
  auto [it, fresh] = partial_.emplace(key, std::move(table));
  return *it->second;
}

SparseVec GerOperad::compose(int n, int i, int m, int a, int b) const {
  check_arity(n);
  check_arity(m);
  check_arity(n + m - 1);
  if (i < 0 || i >= n) throw std::out_of_range("Ger compose: slot out of range");
  return partial_table(n, i, m).at(static_cast<std::size_t>(a) * forests_[m - 1].size() + b);
}

OperadElement interchange_element(const Operad& left, const OperadElement& a, const Operad& right,
                                  const OperadElement& b, const GerOperad& ger) {
  Scalar sa = 0, sb = 0;
  for (const auto& [x, c] : a.vector) {
    if (left.degree(a.arity, x) != 0) throw std::invalid_argument("interchange_element: left factor is not in degree 0");
    sa += c;
  }
  for (const auto& [y, c] : b.vector) {
    if (right.degree(b.arity, y) != 0)
      throw std::invalid_argument("interchange_element: right factor is not in degree 0");
    sb += c;
  }
  int n = a.arity * b.arity;
  OperadElement out{n, {}};
  if (sa * sb != 0) out.vector.emplace_back(ger.product_monomial(n), sa * sb);
  return out;
}

}  // namespace kunneth
