#include "kunneth/e2.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace kunneth {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<int> e2_bounds(int d_max) {
  std::vector<int> bounds{d_max};
  for (int p = 1; p <= d_max + 1; ++p) bounds.push_back(d_max + 1 - p);
  return bounds;
}

DiagComplex::DiagComplex(const Diagonal& diag, int k, std::vector<int> bounds, bool normalized, int threads)
    : diag_(&diag), k_(k), bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw std::invalid_argument("DiagComplex: need at least level 0");
  for (std::size_t p = 1; p < bounds_.size(); ++p)
    if (bounds_[p] > bounds_[p - 1]) throw std::invalid_argument("DiagComplex: degree bounds must not increase");
  std::vector<std::optional<DiagLevel>> built(bounds_.size());
  parallel_for(bounds_.size(), threads, [&](std::size_t p) {
    built[p].emplace(diag, static_cast<int>(p), k, normalized, bounds_[p]);
  });
  for (auto& l : built) levels_.push_back(std::move(*l));

  std::vector<std::pair<int, int>> jobs;
  for (int p = 1; p <= p_max(); ++p)
    for (int q = 0; q <= bounds_[p]; ++q) jobs.emplace_back(p, q);
  std::vector<SparseMatrix> mats(jobs.size());
  std::vector<std::size_t> rks(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    auto [p, q] = jobs[j];
    mats[j] = diag_differential(diag, levels_[p], levels_[p - 1], q);
    rks[j] = rank(mats[j]);
  });
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    boundaries_.emplace(jobs[j], std::move(mats[j]));
    ranks_.emplace(jobs[j], rks[j]);
  }
  for (int p = 2; p <= p_max(); ++p)
    for (int q = 0; q <= bounds_[p]; ++q)
      if (!(boundary(p - 1, q) * boundary(p, q)).is_zero())
        throw NotAComplex("diagonal boundary squares to a nonzero map at p=" + std::to_string(p) +
                          " q=" + std::to_string(q) + " k=" + std::to_string(k));
}

std::size_t DiagComplex::dim(int p, int q) const {
  if (p < 0 || p > p_max() || q < 0 || q > bounds_[p]) return 0;
  auto [b, e] = levels_[p].degree_range(q);
  return e - b;
}

const SparseMatrix& DiagComplex::boundary(int p, int q) const {
  auto it = boundaries_.find({p, q});
  if (it == boundaries_.end())
    throw std::out_of_range("DiagComplex: no boundary at p=" + std::to_string(p) + " q=" + std::to_string(q));
  return it->second;
}

std::size_t DiagComplex::boundary_rank(int p, int q) const {
  if (p == 0) return 0;
  auto it = ranks_.find({p, q});
  if (it == ranks_.end())
    throw std::out_of_range("DiagComplex: no boundary at p=" + std::to_string(p) + " q=" + std::to_string(q));
  return it->second;
}

E2Table e2_page(const DiagComplex& complex, int d_max) {
  E2Table t;
  t.k = complex.arity();
  t.d_max = d_max;
  t.p_max = complex.p_max();
  t.left = "";
  t.right = "";
  for (int p = 0; p <= d_max; ++p)
    for (int q = 0; p + q <= d_max; ++q) {
      if (p + 1 > complex.p_max() || q > complex.degree_bound(p + 1))
        throw std::out_of_range("e2_page: truncation too small for E2 at p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
      std::size_t c = complex.dim(p, q);
      t.chain_dims[{p, q}] = c;
      t.entries[{p, q}] = c - complex.boundary_rank(p, q) - complex.boundary_rank(p + 1, q);
    }
  return t;
}

E2Table e2_page(const Diagonal& diag, int k, int d_max, int threads) {
  DiagComplex complex(diag, k, e2_bounds(d_max), true, threads);
  E2Table t = e2_page(complex, d_max);
  t.left = diag.left().module->name();
  t.right = diag.right().module->name();
  return t;
}

BettiTable betti(const E2Table& table) {
  BettiTable b;
  b.k = table.k;
  b.collapse_assumed = table.collapse_assumed;
  b.betti.assign(table.d_max + 1, 0);
  for (const auto& [pq, dim] : table.entries) b.betti[pq.first + pq.second] += dim;
  return b;
}

namespace {

Scalar trace(const SparseMatrix& m) {
  Scalar t = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) t += m.at(j, j);
  return t;
}

Permutation power(const Permutation& sigma, int e) {
  Permutation out = identity_permutation(static_cast<int>(sigma.size()));
  for (int t = 0; t < e; ++t) out = compose(sigma, out);
  return out;
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

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  return n > 1 ? result - result / n : result;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int t = 1; t <= n; ++t)
    if (n % t == 0) d.push_back(t);
  return d;
}

}  // namespace

std::map<int, Scalar> character(const DiagComplex& complex, const Permutation& sigma) {
  std::map<int, Scalar> out;
  for (int p = 0; p <= complex.p_max(); ++p)
    for (int q = 0; q <= complex.degree_bound(p); ++q) {
      Scalar tr = trace(diag_sigma_matrix(complex.diagonal(), complex.level(p), sigma, q));
      out[q] += p % 2 ? -tr : tr;
    }
  return out;
}

std::map<std::pair<int, int>, Scalar> homology_character(const DiagComplex& complex, const Permutation& sigma,
                                                        int d_max) {
  const Diagonal& diag = complex.diagonal();
  const int N = order(sigma);
  std::vector<Permutation> powers;
  for (int e = 0; e < N; ++e) powers.push_back(power(sigma, e));
  // h[d][(p,q)] = dim of the part of E²_{p,q} fixed by sigma^d.
  std::map<int, std::map<std::pair<int, int>, Scalar>> fixed;
  for (int d : divisors(N)) {
    std::map<std::pair<int, int>, SparseMatrix> proj;
    auto projector = [&](int p, int q) -> const SparseMatrix& {
      auto it = proj.find({p, q});
      if (it != proj.end()) return it->second;
      const DiagLevel& lv = complex.level(p);
      std::size_t n = complex.dim(p, q);
      SparseMatrix sum(n, n);
      int size = N / d;
      for (int t = 0; t < size; ++t) sum = sum + diag_sigma_matrix(diag, lv, powers[(d * t) % N], q);
      return proj.emplace(std::make_pair(p, q), Scalar(1, size) * sum).first->second;
    };
    for (int p = 0; p <= d_max; ++p)
      for (int q = 0; p + q <= d_max; ++q) {
        const SparseMatrix& P = projector(p, q);
        Scalar h = trace(P);
        if (p > 0) h -= rank(complex.boundary(p, q) * P);
        h -= rank(complex.boundary(p + 1, q) * projector(p + 1, q));
        fixed[d][{p, q}] = h;
      }
  }
  std::map<std::pair<int, int>, Scalar> out;
  for (int p = 0; p <= d_max; ++p)
    for (int q = 0; p + q <= d_max; ++q) {
      Scalar tr = 0;
      for (int e : divisors(N)) {
        // Total multiplicity of eigenvalues of exact order e.
        Scalar m = 0;
        for (int d : divisors(e)) m += mobius(e / d) * fixed[d][{p, q}];
        tr += m * mobius(e) / totient(e);
      }
      out[{p, q}] = tr;
    }
  return out;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string cycle_type_label(const std::vector<int>& type) {
  if (type.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s;
}

std::vector<Permutation> class_representatives(int k) {
  std::vector<std::vector<int>> types;
  std::vector<int> cur;
  partitions(k, k, cur, types);
  std::vector<Permutation> reps;
  for (const auto& type : types) {
    Permutation sigma(k);
    int start = 0;
    for (int len : type) {
      for (int t = 0; t < len; ++t) sigma[start + t] = start + (t + 1) % len;
      start += len;
    }
    reps.push_back(sigma);
  }
  return reps;
}

void add_characters(BettiTable& table, const DiagComplex& complex, int d_max) {
  for (const auto& sigma : class_representatives(complex.arity())) {
    std::string cls = cycle_type_label(cycle_type(sigma));
    for (const auto& [pq, value] : homology_character(complex, sigma, d_max))
      table.characters[{pq.first + pq.second, cls}] += value;
  }
}

}  // namespace kunneth
