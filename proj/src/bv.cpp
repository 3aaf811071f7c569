#include "kunneth/bv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace kunneth {

GradedSpace sequence_tensor(const std::vector<GradedSpace>& x, const std::vector<GradedSpace>& y, int n) {
  std::vector<BasisElement> basis;
  auto emit = [&](int l, int m) {
    if (l >= static_cast<int>(x.size()) || m >= static_cast<int>(y.size()))
      throw std::out_of_range("sequence_tensor: arity " + std::to_string(n) + " needs components " +
                              std::to_string(l) + " and " + std::to_string(m));
    for (const auto& a : x[l].basis())
      for (const auto& b : y[m].basis())
        basis.push_back({"(" + std::to_string(l) + "," + std::to_string(m) + "|" + a.label + "|" + b.label + ")",
                         a.degree + b.degree});
  };
  if (n == 0) {
    emit(0, 0);
  } else {
    for (int l = 1; l <= n; ++l)
      if (n % l == 0) emit(l, n / l);
  }
  return GradedSpace(std::move(basis));
}

Diagonal::Diagonal(DiagFactor left, DiagFactor right, std::shared_ptr<const GerOperad> ger)
    : left_(std::move(left)), right_(std::move(right)), ger_(std::move(ger)) {
  for (const DiagFactor* f : {&left_, &right_}) {
    if (!f->module) throw std::invalid_argument("Diagonal: missing module");
    const Operad& o = f->module->over();
    for (int n = 1; n <= o.max_arity(); ++n)
      for (const auto& b : o.component(n).basis())
        if (b.degree != 0)
          throw std::invalid_argument("Diagonal: " + f->module->name() + " is over " + o.name() +
                                      ", which is not concentrated in degree 0");
    if (f->resolution == Resolution::Free && !f->module->free_generators())
      throw std::invalid_argument("Diagonal: " + f->module->name() + " has no free presentation");
  }
}

std::vector<Chain> Diagonal::generators(bool left, int p, int a, int max_degree) const {
  const DiagFactor& f = side(left);
  if (f.resolution == Resolution::Bar) return chains(*f.module, a, p, max_degree);
  std::vector<Chain> out;
  const auto& gens = *f.module->free_generators();
  if (a >= static_cast<int>(gens.size())) return out;
  for (std::size_t g = 0; g < gens[a].dim(); ++g)
    if (gens[a].degree(g) <= max_degree) out.push_back(Chain{a, {}, static_cast<int>(g)});
  return out;
}

int Diagonal::generator_degree(bool left, const Chain& g) const {
  const DiagFactor& f = side(left);
  if (f.resolution == Resolution::Bar) return chain_degree(*f.module, g);
  return (*f.module->free_generators())[g.arity].degree(g.terminal);
}

bool Diagonal::identity_layer(bool left, const Chain& g, int j) const {
  if (side(left).resolution == Resolution::Free) return true;
  return is_identity(g.layers.at(j));
}

int Diagonal::degree(const DiagWord& w) const {
  return morphism_degree(*ger_, w.outer) + generator_degree(true, w.x) + generator_degree(false, w.y);
}

bool Diagonal::is_degenerate(const DiagWord& w, int p) const {
  for (int j = 0; j < p; ++j)
    if (identity_layer(true, w.x, j) && identity_layer(false, w.y, j)) return true;
  return false;
}

std::string Diagonal::label(const DiagWord& w) const {
  std::string xs = left_.resolution == Resolution::Bar
                       ? chain_label(*left_.module, w.x)
                       : (*left_.module->free_generators())[w.x.arity][w.x.terminal].label;
  std::string ys = right_.resolution == Resolution::Bar
                       ? chain_label(*right_.module, w.y)
                       : (*right_.module->free_generators())[w.y.arity][w.y.terminal].label;
  return "<" + morphism_label(*ger_, w.outer) + " | " + std::to_string(w.l) + "x" + std::to_string(w.m) + " | " + xs +
         " | " + ys + ">";
}

std::vector<int> Diagonal::encode(const DiagWord& w) const {
  std::vector<int> v{w.outer.target()};
  v.insert(v.end(), w.outer.map.begin(), w.outer.map.end());
  v.insert(v.end(), w.outer.decorations.begin(), w.outer.decorations.end());
  v.push_back(w.l);
  v.push_back(w.m);
  auto ex = kunneth::encode(w.x);
  auto ey = kunneth::encode(w.y);
  v.insert(v.end(), ex.begin(), ex.end());
  v.insert(v.end(), ey.begin(), ey.end());
  return v;
}

namespace {

// Interchange of the stripped layers: (a, b) -> f(a) * m' + g(b), each fiber
// decorated by the product monomial (the interchange of degree-0 operations).
Morphism interchange_layer(const GerOperad& ger, const Morphism& f, int m, const Morphism& g) {
  const int mt = g.target();
  Morphism out;
  out.map.resize(static_cast<std::size_t>(f.source()) * m);
  for (int a = 0; a < f.source(); ++a)
    for (int b = 0; b < m; ++b) out.map[a * m + b] = f.map[a] * mt + g.map[b];
  std::vector<int> fsize(f.target(), 0), gsize(mt, 0);
  for (int v : f.map) ++fsize[v];
  for (int v : g.map) ++gsize[v];
  out.decorations.resize(static_cast<std::size_t>(f.target()) * mt);
  for (int j = 0; j < f.target(); ++j)
    for (int jj = 0; jj < mt; ++jj) out.decorations[j * mt + jj] = ger.product_monomial(fsize[j] * gsize[jj]);
  return out;
}

ChainCombination strip_first(const Chain& c) {
  Chain d;
  d.arity = c.layers.front().target();
  d.layers.assign(c.layers.begin() + 1, c.layers.end());
  d.terminal = c.terminal;
  return {{d, Scalar(1)}};
}

}  // namespace

DiagCombination Diagonal::face(int p, int i, const DiagWord& w) const {
  if (i < 0 || i > p) throw std::out_of_range("Diagonal::face: index out of range");
  DiagCombination out;
  if (p == 0) throw std::out_of_range("Diagonal::face: level 0 has no faces");
  if (i == 0) {
    bool xbar = left_.resolution == Resolution::Bar;
    bool ybar = right_.resolution == Resolution::Bar;
    Morphism f = xbar ? w.x.layers.front() : identity_morphism(w.l);
    Morphism g = ybar ? w.y.layers.front() : identity_morphism(w.m);
    Chain x = xbar ? strip_first(w.x).front().first : w.x;
    Chain y = ybar ? strip_first(w.y).front().first : w.y;
    Morphism psi = interchange_layer(*ger_, f, w.m, g);
    for (auto& [outer, c] : compose_morphisms(*ger_, w.outer, psi))
      out.push_back({DiagWord{std::move(outer), f.target(), g.target(), x, y}, c});
    return out;
  }
  ChainCombination xs = left_.resolution == Resolution::Bar ? chain_face(*left_.module, w.x, i - 1)
                                                            : ChainCombination{{w.x, Scalar(1)}};
  ChainCombination ys = right_.resolution == Resolution::Bar ? chain_face(*right_.module, w.y, i - 1)
                                                             : ChainCombination{{w.y, Scalar(1)}};
  for (const auto& [x, cx] : xs)
    for (const auto& [y, cy] : ys) out.push_back({DiagWord{w.outer, w.l, w.m, x, y}, cx * cy});
  return out;
}

DiagWord Diagonal::degeneracy(int p, int i, const DiagWord& w) const {
  if (i < 0 || i > p) throw std::out_of_range("Diagonal::degeneracy: index out of range");
  DiagWord d = w;
  if (left_.resolution == Resolution::Bar) d.x = chain_insert_identity(w.x, i);
  if (right_.resolution == Resolution::Bar) d.y = chain_insert_identity(w.y, i);
  return d;
}

DiagCombination Diagonal::relabel(const Permutation& sigma, const DiagWord& w) const {
  DiagCombination out;
  for (auto& [outer, c] : compose_morphisms(*ger_, bijection_morphism(inverse(sigma)), w.outer))
    out.push_back({DiagWord{std::move(outer), w.l, w.m, w.x, w.y}, c});
  return out;
}

namespace {

// Calls emit(map, l, m, x, y, budget) for every admissible (outer surjection, split, generators).
template <class Emit>
void for_each_frame(const Diagonal& diag, int p, int k, bool normalized, int max_degree, Emit&& emit) {
  std::map<int, std::vector<Chain>> xs, ys;
  std::map<int, std::vector<int>> xdeg, ydeg;
  auto gens = [&](bool left, int a) -> const std::vector<Chain>& {
    auto& cache = left ? xs : ys;
    auto& dcache = left ? xdeg : ydeg;
    auto it = cache.find(a);
    if (it == cache.end()) {
      it = cache.emplace(a, diag.generators(left, p, a, max_degree)).first;
      auto& d = dcache[a];
      for (const auto& g : it->second) d.push_back(diag.generator_degree(left, g));
    }
    return it->second;
  };
  auto masks = [&](bool left, const Chain& g) {
    unsigned mask = 0;
    for (int j = 0; j < p; ++j)
      if (diag.identity_layer(left, g, j)) mask |= 1u << j;
    return mask;
  };
  if (k == 0) {
    const auto& X = gens(true, 0);
    const auto& Y = gens(false, 0);
    for (std::size_t a = 0; a < X.size(); ++a)
      for (std::size_t b = 0; b < Y.size(); ++b) {
        if (normalized && (masks(true, X[a]) & masks(false, Y[b]))) continue;
        int budget = max_degree - xdeg[0][a] - ydeg[0][b];
        if (budget >= 0) emit(std::vector<int>{}, 0, 0, X[a], Y[b], budget);
      }
    return;
  }
  for (int n = 1; n <= k; ++n)
    for (const auto& map : surjections(k, n))
      for (int l = 1; l <= n; ++l) {
        if (n % l) continue;
        int m = n / l;
        const auto& X = gens(true, l);
        const auto& Y = gens(false, m);
        const auto& XD = xdeg[l];
        const auto& YD = ydeg[m];
        std::vector<unsigned> ymask(Y.size());
        for (std::size_t b = 0; b < Y.size(); ++b) ymask[b] = masks(false, Y[b]);
        for (std::size_t a = 0; a < X.size(); ++a) {
          unsigned xm = masks(true, X[a]);
          for (std::size_t b = 0; b < Y.size(); ++b) {
            if (normalized && (xm & ymask[b])) continue;
            int budget = max_degree - XD[a] - YD[b];
            if (budget >= 0) emit(map, l, m, X[a], Y[b], budget);
          }
        }
      }
}

}  // namespace

DiagLevel::DiagLevel(const Diagonal& diag, int p, int k, bool normalized, int max_degree)
    : diag_(&diag), p_(p), k_(k), normalized_(normalized), max_degree_(max_degree) {
  const GerOperad& ger = diag.ger();
  for_each_frame(diag, p, k, normalized, max_degree,
                 [&](const std::vector<int>& map, int l, int m, const Chain& x, const Chain& y, int budget) {
                   DiagWord w{Morphism{map, {}}, l, m, x, y};
                   int n = l * m;
                   std::vector<int> sizes(n, 0);
                   for (int v : map) ++sizes[v];
                   w.outer.decorations.assign(n, 0);
                   std::function<void(int, int)> rec = [&](int j, int left) {
                     if (j == n) {
                       words_.push_back(w);
                       return;
                     }
                     const auto& comp = ger.component(sizes[j]);
                     for (std::size_t d = 0; d < comp.dim(); ++d) {
                       if (comp.degree(d) > left) continue;
                       w.outer.decorations[j] = static_cast<int>(d);
                       rec(j + 1, left - comp.degree(d));
                     }
                   };
                   rec(0, budget);
                 });
  std::vector<int> deg(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) deg[i] = diag.degree(words_[i]);
  std::vector<std::size_t> order(words_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
  std::vector<DiagWord> sorted;
  sorted.reserve(words_.size());
  for (std::size_t i : order) {
    index_.emplace(diag.encode(words_[i]), static_cast<int>(sorted.size()));
    degrees_.push_back(deg[i]);
    sorted.push_back(std::move(words_[i]));
  }
  words_ = std::move(sorted);
}

int DiagLevel::index_of(const DiagWord& w) const {
  auto it = index_.find(diag_->encode(w));
  return it == index_.end() ? -1 : it->second;
}

std::pair<std::size_t, std::size_t> DiagLevel::degree_range(int q) const {
  auto lo = std::lower_bound(degrees_.begin(), degrees_.end(), q);
  auto hi = std::upper_bound(degrees_.begin(), degrees_.end(), q);
  return {static_cast<std::size_t>(lo - degrees_.begin()), static_cast<std::size_t>(hi - degrees_.begin())};
}

GradedSpace DiagLevel::space() const {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < words_.size(); ++i) basis.push_back({diag_->label(words_[i]), degrees_[i]});
  return GradedSpace(std::move(basis));
}

std::size_t diag_level_count(const Diagonal& diag, int p, int k, bool normalized, int max_degree) {
  // Counts decorations per fiber by degree instead of listing them.
  const GerOperad& ger = diag.ger();
  std::size_t total = 0;
  for_each_frame(diag, p, k, normalized, max_degree,
                 [&](const std::vector<int>& map, int l, int m, const Chain&, const Chain&, int budget) {
                   int n = l * m;
                   std::vector<std::size_t> ways(budget + 1, 0);
                   ways[0] = 1;
                   std::vector<int> sizes(n, 0);
                   for (int v : map) ++sizes[v];
                   for (int j = 0; j < n; ++j) {
                     auto dims = ger.component(sizes[j]).dims_by_degree();
                     std::vector<std::size_t> next(budget + 1, 0);
                     for (int a = 0; a <= budget; ++a)
                       for (std::size_t d = 0; d < dims.size() && a + static_cast<int>(d) <= budget; ++d)
                         next[a + d] += ways[a] * dims[d];
                     ways = std::move(next);
                   }
                   for (auto w : ways) total += w;
                 });
  return total;
}

namespace {

template <class Images>
SparseMatrix assemble(const DiagLevel& source, const DiagLevel& target, std::size_t col_begin, std::size_t col_end,
                      std::size_t row_begin, std::size_t row_end, Images&& images, const Diagonal& diag) {
  std::vector<SparseVec> cols(col_end - col_begin);
  for (std::size_t j = col_begin; j < col_end; ++j) {
    SparseVec col;
    for (auto& [w, c] : images(source.word(j))) {
      if (target.normalized() && diag.is_degenerate(w, target.level())) continue;
      int row = target.index_of(w);
      if (row < 0 || static_cast<std::size_t>(row) < row_begin || static_cast<std::size_t>(row) >= row_end)
        throw std::logic_error("diagonal: image " + diag.label(w) + " not in target level");
      col.emplace_back(row - static_cast<int>(row_begin), c);
    }
    canonicalize(col);
    cols[j - col_begin] = std::move(col);
  }
  return SparseMatrix(row_end - row_begin, std::move(cols));
}

}  // namespace

SparseMatrix diag_differential(const Diagonal& diag, const DiagLevel& source, const DiagLevel& target, int q) {
  if (source.level() != target.level() + 1 || source.arity() != target.arity())
    throw std::invalid_argument("diag_differential: levels do not match");
  auto [cb, ce] = source.degree_range(q);
  auto [rb, re] = target.degree_range(q);
  int p = source.level();
  return assemble(source, target, cb, ce, rb, re,
                  [&](const DiagWord& w) {
                    DiagCombination all;
                    for (int i = 0; i <= p; ++i)
                      for (auto& [v, c] : diag.face(p, i, w)) all.push_back({std::move(v), i % 2 ? -c : c});
                    return all;
                  },
                  diag);
}

SparseMatrix diag_face_matrix(const Diagonal& diag, const DiagLevel& source, const DiagLevel& target, int i) {
  return assemble(source, target, 0, source.size(), 0, target.size(),
                  [&](const DiagWord& w) { return diag.face(source.level(), i, w); }, diag);
}

SparseMatrix diag_degeneracy_matrix(const Diagonal& diag, const DiagLevel& source, const DiagLevel& target, int i) {
  return assemble(source, target, 0, source.size(), 0, target.size(),
                  [&](const DiagWord& w) { return DiagCombination{{diag.degeneracy(source.level(), i, w), Scalar(1)}}; },
                  diag);
}

SparseMatrix diag_sigma_matrix(const Diagonal& diag, const DiagLevel& level, const Permutation& sigma, int q) {
  auto [b, e] = level.degree_range(q);
  return assemble(level, level, b, e, b, e, [&](const DiagWord& w) { return diag.relabel(sigma, w); }, diag);
}

}  // namespace kunneth
