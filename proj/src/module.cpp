#include "kunneth/module.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "kunneth/operads.hpp"

namespace kunneth {

Morphism identity_morphism(int n) {
  Morphism f;
  f.map = identity_permutation(n);
  f.decorations.assign(n, 0);
  return f;
}

Morphism bijection_morphism(const Permutation& perm) {
  Morphism f;
  f.map = perm;
  f.decorations.assign(perm.size(), 0);
  return f;
}

bool is_identity(const Morphism& f) {
  if (f.source() != f.target()) return false;
  for (int t = 0; t < f.source(); ++t)
    if (f.map[t] != t) return false;
  return true;
}

std::vector<std::vector<int>> fibers(const Morphism& f) {
  std::vector<std::vector<int>> out(f.target());
  for (int t = 0; t < f.source(); ++t) out[f.map[t]].push_back(t);
  return out;
}

int morphism_degree(const Operad& o, const Morphism& f) {
  auto fib = fibers(f);
  int d = 0;
  for (int j = 0; j < f.target(); ++j) d += o.degree(static_cast<int>(fib[j].size()), f.decorations[j]);
  return d;
}

std::string morphism_label(const Operad& o, const Morphism& f) {
  auto fib = fibers(f);
  std::string s;
  for (int j = 0; j < f.target(); ++j) {
    if (j) s += ' ';
    s += '{';
    for (std::size_t u = 0; u < fib[j].size(); ++u) {
      if (u) s += ',';
      s += std::to_string(fib[j][u] + 1);
    }
    s += "}:" + o.component(static_cast<int>(fib[j].size()))[f.decorations[j]].label;
  }
  return s;
}

MorphismCombination compose_morphisms(const Operad& o, const Morphism& first, const Morphism& second) {
  if (first.target() != second.source()) throw std::invalid_argument("compose_morphisms: arities do not match");
  const int k = first.source();
  const int n = first.target();
  const int r = second.target();
  auto fib_first = fibers(first);
  auto fib_second = fibers(second);

  Morphism shape;
  shape.map.resize(k);
  for (int t = 0; t < k; ++t) shape.map[t] = second.map[first.map[t]];

  // Koszul sign of moving (c_0..c_{r-1}, a_0..a_{n-1}) into (c_0, a's over 0, c_1, ...).
  std::vector<int> slot(r + n), degrees(r + n);
  int pos = 0;
  for (int s = 0; s < r; ++s) {
    slot[s] = pos++;
    degrees[s] = o.degree(static_cast<int>(fib_second[s].size()), second.decorations[s]);
    for (int j : fib_second[s]) {
      slot[r + j] = pos++;
      degrees[r + j] = o.degree(static_cast<int>(fib_first[j].size()), first.decorations[j]);
    }
  }
  int sign = koszul_sign(slot, degrees);

  std::vector<SparseVec> decorated(r);
  for (int s = 0; s < r; ++s) {
    int arity = static_cast<int>(fib_second[s].size());
    SparseVec cur{{second.decorations[s], Scalar(1)}};
    std::vector<int> block_order;
    for (int j : fib_second[s]) {
      int mj = static_cast<int>(fib_first[j].size());
      cur = o.compose(arity, static_cast<int>(block_order.size()), mj, cur, SparseVec{{first.decorations[j], Scalar(1)}});
      arity += mj - 1;
      block_order.insert(block_order.end(), fib_first[j].begin(), fib_first[j].end());
    }
    std::vector<int> sorted = block_order;
    std::sort(sorted.begin(), sorted.end());
    Permutation perm(block_order.size());
    for (std::size_t p = 0; p < block_order.size(); ++p)
      perm[p] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), block_order[p]) - sorted.begin());
    decorated[s] = o.relabel(arity, perm, cur);
  }

  MorphismCombination out;
  shape.decorations.assign(r, 0);
  std::function<void(int, Scalar)> expand = [&](int s, Scalar c) {
    if (s == r) {
      out.emplace_back(shape, c);
      return;
    }
    for (const auto& [d, v] : decorated[s]) {
      shape.decorations[s] = d;
      expand(s + 1, c * v);
    }
  };
  expand(0, Scalar(sign));
  return out;
}

std::vector<std::vector<int>> surjections(int k, int n) {
  std::vector<std::vector<int>> out;
  if (n > k || (n == 0) != (k == 0)) return out;
  std::vector<int> map(k), hits(n, 0);
  int missing = n;
  std::function<void(int)> rec = [&](int t) {
    if (t == k) {
      if (missing == 0) out.push_back(map);
      return;
    }
    if (missing > k - t) return;
    for (int v = 0; v < n; ++v) {
      map[t] = v;
      if (hits[v]++ == 0) --missing;
      rec(t + 1);
      if (--hits[v] == 0) ++missing;
    }
  };
  rec(0);
  return out;
}

std::vector<Morphism> morphisms_from(const Operad& o, int k, int max_degree) {
  std::vector<Morphism> out;
  if (k == 0) {
    out.push_back(identity_morphism(0));
    return out;
  }
  for (int n = 1; n <= k; ++n)
    for (const auto& map : surjections(k, n)) {
      std::vector<int> sizes(n, 0);
      for (int v : map) ++sizes[v];
      Morphism f;
      f.map = map;
      f.decorations.assign(n, 0);
      std::function<void(int, int)> rec = [&](int j, int deg) {
        if (j == n) {
          out.push_back(f);
          return;
        }
        const auto& comp = o.component(sizes[j]);
        for (std::size_t a = 0; a < comp.dim(); ++a) {
          if (deg + comp.degree(a) > max_degree) continue;
          f.decorations[j] = static_cast<int>(a);
          rec(j + 1, deg + comp.degree(a));
        }
      };
      rec(0, 0);
    }
  return out;
}

void RightModule::check_arity(int k) const {
  if (k < 0 || k > max_arity_)
    throw std::out_of_range(name_ + ": arity " + std::to_string(k) + " outside 0.." + std::to_string(max_arity_));
}

SparseVec RightModule::relabel(int k, std::span<const int> perm, const SparseVec& x) const {
  SparseVec out;
  for (const auto& [b, c] : x) axpy(out, c, relabel(k, perm, b));
  canonicalize(out);
  return out;
}

SparseVec RightModule::act_partial(int n, int i, int m, const SparseVec& x, const SparseVec& a) const {
  SparseVec out;
  for (const auto& [b, cb] : x)
    for (const auto& [e, ce] : a) axpy(out, cb * ce, act_partial(n, i, m, b, e));
  canonicalize(out);
  return out;
}

SparseVec act(const RightModule& m, const SparseVec& x, const Morphism& f) {
  const int n = f.target();
  if (n == 0) {
    if (f.source() != 0) throw std::invalid_argument("act: reduced operads have no morphisms [k] -> [0] for k > 0");
    return x;
  }
  auto fib = fibers(f);
  SparseVec cur = x;
  int arity = n;
  std::vector<int> block_order;
  for (int j = 0; j < n; ++j) {
    int mj = static_cast<int>(fib[j].size());
    cur = m.act_partial(arity, static_cast<int>(block_order.size()), mj, cur, SparseVec{{f.decorations[j], Scalar(1)}});
    arity += mj - 1;
    block_order.insert(block_order.end(), fib[j].begin(), fib[j].end());
  }
  return m.relabel(arity, block_order, cur);
}

namespace {

const GradedSpace& empty_configuration() {
  static const GradedSpace space({{"()", 0}});
  return space;
}

class OperadModule : public RightModule {
 public:
  explicit OperadModule(std::shared_ptr<const Operad> o) : RightModule(o->name(), o, o->max_arity()) {
    generators_.emplace_back(std::vector<BasisElement>{{"()", 0}});
    generators_.emplace_back(std::vector<BasisElement>{{"1", 0}});
    for (int k = 2; k <= max_arity(); ++k) generators_.emplace_back();
  }

  const GradedSpace& component(int k) const override {
    check_arity(k);
    return k == 0 ? empty_configuration() : over().component(k);
  }
  SparseVec relabel(int k, std::span<const int> perm, int x) const override {
    check_arity(k);
    if (k == 0) return {{x, Scalar(1)}};
    return over().relabel(k, perm, x);
  }
  SparseVec act_partial(int n, int i, int m, int x, int a) const override {
    check_arity(n);
    if (n == 0) throw std::out_of_range("act_partial: arity 0 has no slots");
    return over().compose(n, i, m, x, a);
  }
  const std::vector<GradedSpace>* free_generators() const override { return &generators_; }

 private:
  std::vector<GradedSpace> generators_;
};

// Cyclic words over [k] rotated to start at 0, times {e, t}.
class CircleModule : public RightModule {
 public:
  CircleModule(std::shared_ptr<const Operad> ass)
      : RightModule("S1", ass, ass->max_arity()), ass_(dynamic_cast<const AssOperad*>(ass.get())) {
    if (!ass_) throw std::invalid_argument("circle_module: needs the associative operad");
    components_.push_back(empty_configuration());
    tails_.emplace_back();
    for (int k = 1; k <= max_arity(); ++k) {
      std::vector<Permutation> tails;
      Permutation tail(k - 1);
      for (int u = 0; u < k - 1; ++u) tail[u] = u + 1;
      do tails.push_back(tail);
      while (std::next_permutation(tail.begin(), tail.end()));
      std::vector<BasisElement> basis;
      for (int cls = 0; cls < 2; ++cls)
        for (const auto& t : tails) {
          std::string label = cls ? "t(1" : "e(1";
          for (int v : t) label += "," + std::to_string(v + 1);
          basis.push_back({label + ")", cls});
        }
      components_.emplace_back(std::move(basis));
      tails_.push_back(std::move(tails));
    }
  }

  const GradedSpace& component(int k) const override {
    check_arity(k);
    return components_[k];
  }

  SparseVec relabel(int k, std::span<const int> perm, int x) const override {
    check_arity(k);
    if (k == 0) return {{x, Scalar(1)}};
    auto [cls, word] = decode(k, x);
    for (int& v : word) v = perm[v];
    return {{encode(k, cls, word), Scalar(1)}};
  }

  SparseVec act_partial(int n, int i, int m, int x, int a) const override {
    check_arity(n);
    check_arity(n + m - 1);
    if (n == 0) throw std::out_of_range("act_partial: arity 0 has no slots");
    auto [cls, word] = decode(n, x);
    const auto& inserted = ass_->word(m, a);
    std::vector<int> out;
    for (int v : word) {
      if (v < i) {
        out.push_back(v);
      } else if (v > i) {
        out.push_back(v + m - 1);
      } else {
        for (int u : inserted) out.push_back(u + i);
      }
    }
    return {{encode(n + m - 1, cls, out), Scalar(1)}};
  }

 private:
  std::pair<int, std::vector<int>> decode(int k, int x) const {
    int per = static_cast<int>(tails_[k].size());
    int cls = x / per;
    std::vector<int> word{0};
    const auto& t = tails_[k].at(x % per);
    word.insert(word.end(), t.begin(), t.end());
    return {cls, word};
  }

  int encode(int k, int cls, std::vector<int> word) const {
    std::rotate(word.begin(), std::find(word.begin(), word.end(), 0), word.end());
    // Lexicographic rank of the tail among permutations of 1..k-1.
    int rank = 0;
    for (int t = 1; t < k; ++t) {
      int smaller = 0;
      for (int u = t + 1; u < k; ++u) smaller += word[u] < word[t];
      rank = rank * (k - t) + smaller;
    }
    return cls * static_cast<int>(tails_[k].size()) + rank;
  }

  const AssOperad* ass_;
  std::vector<GradedSpace> components_;
  std::vector<std::vector<Permutation>> tails_;
};

}  // namespace

std::shared_ptr<const RightModule> module_from_operad(std::shared_ptr<const Operad> o) {
  return std::make_shared<OperadModule>(std::move(o));
}

std::shared_ptr<const RightModule> circle_module(std::shared_ptr<const Operad> ass) {
  return std::make_shared<CircleModule>(std::move(ass));
}

TableModule::TableModule(std::string name, std::shared_ptr<const Operad> over, int max_arity,
                         std::vector<GradedSpace> components)
    : RightModule(std::move(name), std::move(over), max_arity), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != max_arity + 1)
    throw std::invalid_argument("TableModule: need one component per arity 0.." + std::to_string(max_arity));
}

const GradedSpace& TableModule::component(int k) const {
  check_arity(k);
  return components_[k];
}

SparseVec TableModule::relabel(int k, std::span<const int> perm, int x) const {
  check_arity(k);
  if (k == 0) return {{x, Scalar(1)}};
  auto it = sigma_.find({k, Permutation(perm.begin(), perm.end())});
  if (it == sigma_.end()) throw std::logic_error(name() + ": no action table for " + one_line(perm));
  return it->second.at(x);
}

SparseVec TableModule::act_partial(int n, int i, int m, int x, int a) const {
  check_arity(n);
  auto it = partial_.find({n, i, m});
  if (it == partial_.end())
    throw std::logic_error(name() + ": no action table for n=" + std::to_string(n) + " i=" + std::to_string(i + 1) +
                           " m=" + std::to_string(m));
  return it->second.at(static_cast<std::size_t>(x) * over().component(m).dim() + a);
}

void TableModule::set_sigma(int k, const Permutation& perm, std::vector<SparseVec> columns) {
  for (auto& c : columns) canonicalize(c);
  sigma_[{k, perm}] = std::move(columns);
}

void TableModule::set_partial(int n, int i, int m, std::vector<SparseVec> columns) {
  for (auto& c : columns) canonicalize(c);
  partial_[{n, i, m}] = std::move(columns);
}

bool TableModule::has_sigma(int k, const Permutation& perm) const { return sigma_.count({k, perm}) > 0; }

bool TableModule::has_partial(int n, int i, int m) const { return partial_.count({n, i, m}) > 0; }

AxiomReport check_module_axioms(const RightModule& mod, int arity_bound) {
  AxiomReport report;
  const Operad& o = mod.over();
  int bound = std::min({arity_bound, mod.max_arity(), o.max_arity()});
  auto fail = [&](const std::string& what) {
    if (report.violations.size() < 40) report.violations.push_back(what);
  };
  auto basis = [](int x) { return SparseVec{{x, Scalar(1)}}; };
  auto label = [&](int k, int x) { return mod.component(k)[x].label; };
  auto olabel = [&](int n, int a) { return o.component(n)[a].label; };
  if (mod.component(0).dim() != 1 || mod.component(0).degree(0) != 0)
    fail("arity 0 must be one-dimensional in degree 0");

  for (int k = 1; k <= bound; ++k) {
    const auto& mk = mod.component(k);
    auto perms = all_permutations(k);
    for (std::size_t x = 0; x < mk.dim(); ++x) {
      SparseVec xv = basis(static_cast<int>(x));
      for (int i = 0; i < k; ++i)
        if (mod.act_partial(k, i, 1, xv, basis(o.unit())) != xv)
          fail("unit: " + label(k, static_cast<int>(x)) + " o_" + std::to_string(i + 1) + " 1");
      if (mod.relabel(k, identity_permutation(k), xv) != xv)
        fail("identity permutation moves " + label(k, static_cast<int>(x)));
      for (const auto& sigma : perms) {
        SparseVec once = mod.relabel(k, sigma, xv);
        for (const auto& e : once)
          if (mod.degree(k, e.first) != mk.degree(x)) fail("degree not preserved by relabel of " + label(k, static_cast<int>(x)));
        for (const auto& tau : perms)
          if (mod.relabel(k, tau, once) != mod.relabel(k, compose(tau, sigma), xv))
            fail("group action: " + label(k, static_cast<int>(x)) + " by " + one_line(sigma) + " then " +
                 one_line(tau));
      }
    }
  }

  for (int n = 1; n <= bound; ++n)
    for (int m = 1; n + m - 1 <= bound; ++m) {
      auto sperms = all_permutations(n);
      auto tperms = all_permutations(m);
      for (int i = 0; i < n; ++i)
        for (std::size_t x = 0; x < mod.component(n).dim(); ++x)
          for (std::size_t a = 0; a < o.component(m).dim(); ++a) {
            std::string where = label(n, static_cast<int>(x)) + " o_" + std::to_string(i + 1) + " " +
                                olabel(m, static_cast<int>(a));
            SparseVec xa = mod.act_partial(n, i, m, static_cast<int>(x), static_cast<int>(a));
            for (const auto& e : xa)
              if (mod.degree(n + m - 1, e.first) != mod.degree(n, static_cast<int>(x)) + o.degree(m, static_cast<int>(a)))
                fail("degree not preserved: " + where);
            for (const auto& sigma : sperms)
              for (const auto& tau : tperms) {
                SparseVec lhs = mod.relabel(n + m - 1, block_permutation(sigma, i, tau), xa);
                SparseVec rhs = mod.act_partial(n, sigma[i], m, mod.relabel(n, sigma, basis(static_cast<int>(x))),
                                                o.relabel(m, tau, basis(static_cast<int>(a))));
                if (lhs != rhs) fail("equivariance: " + where + " under " + one_line(sigma) + " and " + one_line(tau));
              }
          }
    }

  for (int n = 1; n <= bound; ++n)
    for (int m = 1; n + m - 1 <= bound; ++m)
      for (int l = 1; n + m + l - 2 <= bound; ++l)
        for (std::size_t x = 0; x < mod.component(n).dim(); ++x)
          for (std::size_t a = 0; a < o.component(m).dim(); ++a)
            for (std::size_t b = 0; b < o.component(l).dim(); ++b) {
              SparseVec xv = basis(static_cast<int>(x)), av = basis(static_cast<int>(a)), bv = basis(static_cast<int>(b));
              std::string names = label(n, static_cast<int>(x)) + ", " + olabel(m, static_cast<int>(a)) + ", " +
                                  olabel(l, static_cast<int>(b));
              for (int i = 0; i < n; ++i)
                for (int s = 0; s < m; ++s) {
                  SparseVec lhs = mod.act_partial(n + m - 1, i + s, l, mod.act_partial(n, i, m, xv, av), bv);
                  SparseVec rhs = mod.act_partial(n, i, m + l - 1, xv, o.compose(m, s, l, av, bv));
                  if (lhs != rhs)
                    fail("nested associativity: " + names + " at i=" + std::to_string(i + 1) + " s=" + std::to_string(s + 1));
                }
              int sign = (o.degree(m, static_cast<int>(a)) % 2 && o.degree(l, static_cast<int>(b)) % 2) ? -1 : 1;
              for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                  SparseVec lhs = mod.act_partial(n + m - 1, i, l, mod.act_partial(n, j, m, xv, av), bv);
                  SparseVec rhs = mod.act_partial(n + l - 1, j + l - 1, m, mod.act_partial(n, i, l, xv, bv), av);
                  for (auto& e : rhs) e.second *= sign;
                  if (lhs != rhs)
                    fail("disjoint associativity: " + names + " at i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
                }
            }
  return report;
}

nlohmann::json module_to_json(const RightModule& mod) {
  nlohmann::json j;
  j["name"] = mod.name();
  j["over"] = mod.over().name();
  j["max_arity"] = mod.max_arity();
  nlohmann::json comps = nlohmann::json::object();
  for (int k = 0; k <= mod.max_arity(); ++k) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : mod.component(k).basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
    comps[std::to_string(k)] = basis;
  }
  j["components"] = comps;
  nlohmann::json sigma = nlohmann::json::object();
  for (int k = 1; k <= mod.max_arity(); ++k) {
    const auto& mk = mod.component(k);
    nlohmann::json per = nlohmann::json::object();
    for (const auto& p : all_permutations(k)) {
      nlohmann::json triples = nlohmann::json::array();
      for (std::size_t x = 0; x < mk.dim(); ++x)
        for (auto& t : detail::matrix_triples(mod.relabel(k, p, static_cast<int>(x)), mk[x].label, mk))
          triples.push_back(std::move(t));
      per[one_line(p)] = triples;
    }
    sigma[std::to_string(k)] = per;
  }
  j["sigma_action"] = sigma;
  nlohmann::json partial = nlohmann::json::array();
  int bound = std::min(mod.max_arity(), mod.over().max_arity());
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; n + m - 1 <= bound; ++m) {
      GradedSpace cols = tensor({mod.component(n), mod.over().component(m)});
      const auto& target = mod.component(n + m - 1);
      for (int i = 0; i < n; ++i) {
        nlohmann::json triples = nlohmann::json::array();
        for (std::size_t c = 0; c < cols.dim(); ++c) {
          const auto& idx = cols.factor_indices(c);
          for (auto& t : detail::matrix_triples(mod.act_partial(n, i, m, idx[0], idx[1]), cols[c].label, target))
            triples.push_back(std::move(t));
        }
        partial.push_back({{"n", n}, {"i", i + 1}, {"m", m}, {"matrix", triples}});
      }
    }
  j["partial_action"] = partial;
  return j;
}

std::shared_ptr<const TableModule> module_from_json(const nlohmann::json& j, std::shared_ptr<const Operad> over) {
  if (!j.is_object()) throw LoadError("module data must be a JSON object");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "file";
  if (!j.contains("over") || !j["over"].is_string()) throw LoadError("module: missing 'over'");
  if (j["over"].get<std::string>() != over->name())
    throw LoadError("module is over '" + j["over"].get<std::string>() + "', expected '" + over->name() + "'");
  int max_arity = detail::read_int(j, "max_arity", "module");
  if (max_arity < 0) throw LoadError("max_arity must be non-negative");
  if (max_arity > over->max_arity())
    throw LoadError("module max_arity " + std::to_string(max_arity) + " exceeds the operad's " +
                    std::to_string(over->max_arity()));
  if (!j.contains("components")) throw LoadError("missing components");
  auto comps = detail::read_components(j["components"], 0, max_arity);
  if (comps[0].dim() != 1 || comps[0].degree(0) != 0)
    throw LoadError("arity 0 must have exactly one basis element, in degree 0");
  auto mod = std::make_shared<TableModule>(name, over, max_arity, comps);

  if (!j.contains("sigma_action") || !j["sigma_action"].is_object()) throw LoadError("missing sigma_action");
  const auto& sigma = j["sigma_action"];
  for (int k = 1; k <= max_arity; ++k) {
    auto key = std::to_string(k);
    if (!sigma.contains(key) || !sigma[key].is_object()) throw LoadError("sigma_action: no table for arity " + key);
    for (const auto& [perm_text, triples] : sigma[key].items()) {
      Permutation p;
      try {
        p = parse_one_line(perm_text);
      } catch (const std::invalid_argument& e) {
        throw LoadError(std::string("sigma_action: ") + e.what());
      }
      if (static_cast<int>(p.size()) != k) throw LoadError("sigma_action: '" + perm_text + "' is not in arity " + key);
      const auto& mk = comps[k];
      mod->set_sigma(k, p, detail::read_triples(triples, mk, mk, "sigma_action " + key + " [" + perm_text + "]"));
    }
    for (const auto& p : all_permutations(k))
      if (!mod->has_sigma(k, p)) throw LoadError("sigma_action: missing permutation " + one_line(p));
  }

  if (!j.contains("partial_action") || !j["partial_action"].is_array()) throw LoadError("missing partial_action");
  for (const auto& t : j["partial_action"]) {
    int n = detail::read_int(t, "n", "partial_action");
    int i = detail::read_int(t, "i", "partial_action");
    int m = detail::read_int(t, "m", "partial_action");
    if (n < 1 || m < 1 || n + m - 1 > max_arity || i < 1 || i > n)
      throw LoadError("partial_action: bad indices n=" + std::to_string(n) + " i=" + std::to_string(i) +
                      " m=" + std::to_string(m));
    if (!t.contains("matrix")) throw LoadError("partial_action: missing matrix");
    GradedSpace cols = tensor({comps[n], over->component(m)});
    std::string where = "partial_action n=" + std::to_string(n) + " i=" + std::to_string(i) + " m=" + std::to_string(m);
    mod->set_partial(n, i - 1, m, detail::read_triples(t["matrix"], comps[n + m - 1], cols, where));
  }
  for (int n = 1; n <= max_arity; ++n)
    for (int m = 1; n + m - 1 <= max_arity; ++m)
      for (int i = 0; i < n; ++i)
        if (!mod->has_partial(n, i, m))
          throw LoadError("partial_action: missing table n=" + std::to_string(n) + " i=" + std::to_string(i + 1) +
                          " m=" + std::to_string(m));

  AxiomReport report = check_module_axioms(*mod, max_arity);
  if (!report.ok()) {
    std::string msg = "module axioms violated:";
    for (std::size_t k = 0; k < std::min<std::size_t>(report.violations.size(), 5); ++k)
      msg += "\n  " + report.violations[k];
    throw LoadError(msg);
  }
  return mod;
}

std::shared_ptr<const TableModule> load_module(const std::string& path, std::shared_ptr<const Operad> over) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(path + ": " + e.what());
  }
  return module_from_json(j, std::move(over));
}

}  // namespace kunneth
