#include "kunneth/operad.hpp"

#include <fstream>
#include <sstream>

namespace kunneth {

void Operad::check_arity(int n) const {
  if (n < 1 || n > max_arity_)
    throw std::out_of_range(name_ + ": arity " + std::to_string(n) + " outside 1.." + std::to_string(max_arity_));
}

SparseVec Operad::relabel(int n, std::span<const int> perm, const SparseVec& a) const {
  SparseVec out;
  for (const auto& [x, c] : a) axpy(out, c, relabel(n, perm, x));
  canonicalize(out);
  return out;
}

SparseVec Operad::compose(int n, int i, int m, const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) axpy(out, cx * cy, compose(n, i, m, x, y));
  canonicalize(out);
  return out;
}

namespace {

constexpr std::size_t kMaxReported = 40;

class Checker {
 public:
  Checker(const Operad& o, AxiomReport& report) : o_(o), report_(report) {}

  void fail(const std::string& what) {
    if (report_.violations.size() < kMaxReported) report_.violations.push_back(what);
  }

  std::string label(int n, int a) const { return o_.component(n)[a].label; }

  void expect_equal(const SparseVec& lhs, const SparseVec& rhs, const std::string& what) {
    if (lhs != rhs) fail(what);
  }

  void expect_degree(int n, const SparseVec& v, int degree, const std::string& what) {
    for (const auto& e : v)
      if (o_.degree(n, e.first) != degree) {
        fail("degree not preserved: " + what);
        return;
      }
  }

 private:
  const Operad& o_;
  AxiomReport& report_;
};

SparseVec basis_vec(int a) { return {{a, Scalar(1)}}; }

}  // namespace

Permutation block_permutation(const Permutation& sigma, int i, const Permutation& tau) {
  int n = static_cast<int>(sigma.size());
  int m = static_cast<int>(tau.size());
  Permutation pi;
  auto place = [&](int t) { return sigma[t] < sigma[i] ? sigma[t] : sigma[t] + m - 1; };
  for (int t = 0; t < i; ++t) pi.push_back(place(t));
  for (int s = 0; s < m; ++s) pi.push_back(sigma[i] + tau[s]);
  for (int t = i + 1; t < n; ++t) pi.push_back(place(t));
  return pi;
}

AxiomReport check_operad_axioms(const Operad& o, int arity_bound) {
  AxiomReport report;
  Checker ck(o, report);
  int bound = std::min(arity_bound, o.max_arity());
  if (bound < 1) return report;
  const auto& one = o.component(1);
  if (one.dim() != 1 || one.degree(0) != 0) {
    ck.fail("unit: arity 1 must be one-dimensional in degree 0");
    return report;
  }
  const SparseVec unit = basis_vec(o.unit());

  for (int n = 1; n <= bound; ++n) {
    const auto& on = o.component(n);
    auto perms = all_permutations(n);
    for (std::size_t a = 0; a < on.dim(); ++a) {
      const SparseVec av = basis_vec(static_cast<int>(a));
      const std::string la = ck.label(n, static_cast<int>(a));
      ck.expect_equal(o.compose(1, 0, n, unit, av), av, "unit (left): 1 o " + la);
      for (int i = 0; i < n; ++i)
        ck.expect_equal(o.compose(n, i, 1, av, unit), av, "unit (right): " + la + " o_" + std::to_string(i + 1) + " 1");
      ck.expect_equal(o.relabel(n, identity_permutation(n), av), av, "identity permutation moves " + la);
      for (const auto& sigma : perms) {
        SparseVec once = o.relabel(n, sigma, av);
        ck.expect_degree(n, once, on.degree(a), "relabel " + la + " by " + one_line(sigma));
        for (const auto& tau : perms)
          ck.expect_equal(o.relabel(n, tau, once), o.relabel(n, compose(tau, sigma), av),
                          "group action: " + la + " by " + one_line(sigma) + " then " + one_line(tau));
      }
    }
  }

  // Equivariance and degree preservation of partial compositions.
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; n + m - 1 <= bound; ++m) {
      const auto& on = o.component(n);
      const auto& om = o.component(m);
      auto sperms = all_permutations(n);
      auto tperms = all_permutations(m);
      for (int i = 0; i < n; ++i)
        for (std::size_t a = 0; a < on.dim(); ++a)
          for (std::size_t b = 0; b < om.dim(); ++b) {
            std::string where = ck.label(n, static_cast<int>(a)) + " o_" + std::to_string(i + 1) + " " +
                                ck.label(m, static_cast<int>(b));
            SparseVec ab = o.compose(n, i, m, static_cast<int>(a), static_cast<int>(b));
            ck.expect_degree(n + m - 1, ab, on.degree(a) + om.degree(b), where);
            for (const auto& sigma : sperms)
              for (const auto& tau : tperms) {
                SparseVec lhs = o.relabel(n + m - 1, block_permutation(sigma, i, tau), ab);
                SparseVec rhs = o.compose(n, sigma[i], m, o.relabel(n, sigma, basis_vec(static_cast<int>(a))),
                                          o.relabel(m, tau, basis_vec(static_cast<int>(b))));
                ck.expect_equal(lhs, rhs, "equivariance: " + where + " under " + one_line(sigma) + " and " +
                                              one_line(tau));
              }
          }
    }

  // Nested and disjoint associativity.
  for (int n = 1; n <= bound; ++n)
    for (int m = 1; n + m - 1 <= bound; ++m)
      for (int l = 1; n + m + l - 2 <= bound; ++l) {
        const auto& on = o.component(n);
        const auto& om = o.component(m);
        const auto& ol = o.component(l);
        for (std::size_t a = 0; a < on.dim(); ++a)
          for (std::size_t b = 0; b < om.dim(); ++b)
            for (std::size_t c = 0; c < ol.dim(); ++c) {
              SparseVec av = basis_vec(static_cast<int>(a));
              SparseVec bv = basis_vec(static_cast<int>(b));
              SparseVec cv = basis_vec(static_cast<int>(c));
              std::string names = ck.label(n, static_cast<int>(a)) + ", " + ck.label(m, static_cast<int>(b)) + ", " +
                                  ck.label(l, static_cast<int>(c));
              for (int i = 0; i < n; ++i)
                for (int s = 0; s < m; ++s) {
                  SparseVec lhs = o.compose(n + m - 1, i + s, l, o.compose(n, i, m, av, bv), cv);
                  SparseVec rhs = o.compose(n, i, m + l - 1, av, o.compose(m, s, l, bv, cv));
                  ck.expect_equal(lhs, rhs, "nested associativity: " + names + " at i=" + std::to_string(i + 1) +
                                                " s=" + std::to_string(s + 1));
                }
              // Disjoint slots i < j: b goes to j, c goes to i.
              if (n + m + l - 2 > bound) continue;
              int sign = (om.degree(b) % 2 && ol.degree(c) % 2) ? -1 : 1;
              for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                  SparseVec lhs = o.compose(n + m - 1, i, l, o.compose(n, j, m, av, bv), cv);
                  SparseVec rhs = o.compose(n + l - 1, j + l - 1, m, o.compose(n, i, l, av, cv), bv);
                  for (auto& e : rhs) e.second *= sign;
                  ck.expect_equal(lhs, rhs, "disjoint associativity: " + names + " at i=" + std::to_string(i + 1) +
                                                " j=" + std::to_string(j + 1));
                }
            }
      }
  return report;
}

TableOperad::TableOperad(std::string name, int max_arity, std::vector<GradedSpace> components)
    : Operad(std::move(name), max_arity), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != max_arity)
    throw std::invalid_argument("TableOperad: need one component per arity 1.." + std::to_string(max_arity));
}

const GradedSpace& TableOperad::component(int n) const {
  check_arity(n);
  return components_[n - 1];
}

SparseVec TableOperad::relabel(int n, std::span<const int> perm, int a) const {
  check_arity(n);
  auto it = sigma_.find({n, Permutation(perm.begin(), perm.end())});
  if (it == sigma_.end()) throw std::logic_error(name() + ": no action table for " + one_line(perm));
  return it->second.at(a);
}

SparseVec TableOperad::compose(int n, int i, int m, int a, int b) const {
  check_arity(n);
  check_arity(m);
  auto it = partial_.find({n, i, m});
  if (it == partial_.end())
    throw std::logic_error(name() + ": no composition table for n=" + std::to_string(n) + " i=" +
                           std::to_string(i + 1) + " m=" + std::to_string(m));
  return it->second.at(static_cast<std::size_t>(a) * component(m).dim() + b);
}

void TableOperad::set_sigma(int n, const Permutation& perm, std::vector<SparseVec> columns) {
  for (auto& c : columns) canonicalize(c);
  sigma_[{n, perm}] = std::move(columns);
}

void TableOperad::set_partial(int n, int i, int m, std::vector<SparseVec> columns) {
  for (auto& c : columns) canonicalize(c);
  partial_[{n, i, m}] = std::move(columns);
}

bool TableOperad::has_sigma(int n, const Permutation& perm) const { return sigma_.count({n, perm}) > 0; }

bool TableOperad::has_partial(int n, int i, int m) const { return partial_.count({n, i, m}) > 0; }

namespace detail {

nlohmann::json matrix_triples(const SparseVec& column, const std::string& col_label, const GradedSpace& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [r, v] : column)
    out.push_back({rows[r].label, col_label, v.get_num().get_str(), v.get_den().get_str()});
  return out;
}

namespace {
mpz_class read_integer(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw LoadError(where + ": coefficient is not an integer: " + j.dump());
}
}  // namespace

std::vector<SparseVec> read_triples(const nlohmann::json& triples, const GradedSpace& rows, const GradedSpace& cols,
                                    const std::string& where) {
  if (!triples.is_array()) throw LoadError(where + ": matrix must be an array of [row, col, num, den]");
  std::vector<SparseVec> out(cols.dim());
  for (const auto& t : triples) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_string() || !t[1].is_string())
      throw LoadError(where + ": malformed entry " + t.dump());
    int r = rows.index_of(t[0].get<std::string>());
    int c = cols.index_of(t[1].get<std::string>());
    if (r < 0) throw LoadError(where + ": unknown row label " + t[0].dump());
    if (c < 0) throw LoadError(where + ": unknown column label " + t[1].dump());
    if (rows.degree(r) != cols.degree(c))
      throw LoadError(where + ": degree mismatch between " + t[0].dump() + " and " + t[1].dump());
    mpz_class den = read_integer(t[3], where);
    if (den == 0) throw LoadError(where + ": zero denominator");
    Scalar v(read_integer(t[2], where), den);
    v.canonicalize();
    out[c].emplace_back(r, v);
  }
  return out;
}

}  // namespace detail

nlohmann::json operad_to_json(const Operad& o) {
  nlohmann::json j;
  j["name"] = o.name();
  j["max_arity"] = o.max_arity();
  nlohmann::json comps = nlohmann::json::object();
  for (int n = 1; n <= o.max_arity(); ++n) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : o.component(n).basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
    comps[std::to_string(n)] = basis;
  }
  j["components"] = comps;
  j["unit"] = o.component(1)[o.unit()].label;
  nlohmann::json sigma = nlohmann::json::object();
  for (int n = 1; n <= o.max_arity(); ++n) {
    const auto& on = o.component(n);
    nlohmann::json per = nlohmann::json::object();
    for (const auto& p : all_permutations(n)) {
      nlohmann::json triples = nlohmann::json::array();
      for (std::size_t a = 0; a < on.dim(); ++a)
        for (auto& t : detail::matrix_triples(o.relabel(n, p, static_cast<int>(a)), on[a].label, on))
          triples.push_back(std::move(t));
      per[one_line(p)] = triples;
    }
    sigma[std::to_string(n)] = per;
  }
  j["sigma_action"] = sigma;
  nlohmann::json partial = nlohmann::json::array();
  for (int n = 1; n <= o.max_arity(); ++n)
    for (int m = 1; n + m - 1 <= o.max_arity(); ++m) {
      GradedSpace cols = tensor({o.component(n), o.component(m)});
      const auto& target = o.component(n + m - 1);
      for (int i = 0; i < n; ++i) {
        nlohmann::json triples = nlohmann::json::array();
        for (std::size_t c = 0; c < cols.dim(); ++c) {
          const auto& idx = cols.factor_indices(c);
          for (auto& t : detail::matrix_triples(o.compose(n, i, m, idx[0], idx[1]), cols[c].label, target))
            triples.push_back(std::move(t));
        }
        partial.push_back({{"n", n}, {"i", i + 1}, {"m", m}, {"matrix", triples}});
      }
    }
  j["partial_comp"] = partial;
  return j;
}

namespace detail {

std::vector<GradedSpace> read_components(const nlohmann::json& comps, int from, int to) {
  if (!comps.is_object()) throw LoadError("components must be an object keyed by arity");
  std::vector<GradedSpace> out;
  for (int n = from; n <= to; ++n) {
    auto key = std::to_string(n);
    if (!comps.contains(key)) {
      if (n == 1) throw LoadError("unit required: no component in arity 1");
      throw LoadError("missing component for arity " + key);
    }
    std::vector<BasisElement> basis;
    for (const auto& b : comps[key]) {
      if (!b.is_object() || !b.contains("label") || !b.contains("degree") || !b["label"].is_string() ||
          !b["degree"].is_number_integer())
        throw LoadError("arity " + key + ": basis entries need a string label and an integer degree");
      basis.push_back({b["label"].get<std::string>(), b["degree"].get<int>()});
    }
    try {
      out.emplace_back(std::move(basis));
    } catch (const std::invalid_argument& e) {
      throw LoadError("arity " + key + ": " + e.what());
    }
  }
  return out;
}

int read_int(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw LoadError(where + ": missing integer field '" + key + "'");
  return j[key].get<int>();
}

}  // namespace detail

std::shared_ptr<const TableOperad> operad_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw LoadError("operad data must be a JSON object");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "file";
  int max_arity = detail::read_int(j, "max_arity", "operad");
  if (max_arity < 1) throw LoadError("max_arity must be at least 1");
  if (!j.contains("components")) throw LoadError("missing components");
  auto comps = detail::read_components(j["components"], 1, max_arity);
  if (comps[0].dim() != 1 || comps[0].degree(0) != 0)
    throw LoadError("unit required: arity 1 must have exactly one basis element, in degree 0");
  if (j.contains("unit") && (!j["unit"].is_string() || j["unit"].get<std::string>() != comps[0][0].label))
    throw LoadError("unit label does not name the arity 1 basis element");
  auto op = std::make_shared<TableOperad>(name, max_arity, comps);

  if (!j.contains("sigma_action") || !j["sigma_action"].is_object()) throw LoadError("missing sigma_action");
  const auto& sigma = j["sigma_action"];
  for (int n = 1; n <= max_arity; ++n) {
    auto key = std::to_string(n);
    if (!sigma.contains(key) || !sigma[key].is_object())
      throw LoadError("sigma_action: no table for arity " + key);
    for (const auto& [perm_text, triples] : sigma[key].items()) {
      Permutation p;
      try {
        p = parse_one_line(perm_text);
      } catch (const std::invalid_argument& e) {
        throw LoadError(std::string("sigma_action: ") + e.what());
      }
      if (static_cast<int>(p.size()) != n) throw LoadError("sigma_action: '" + perm_text + "' is not in arity " + key);
      const auto& on = comps[n - 1];
      op->set_sigma(n, p, detail::read_triples(triples, on, on, "sigma_action " + key + " [" + perm_text + "]"));
    }
    for (const auto& p : all_permutations(n))
      if (!op->has_sigma(n, p)) throw LoadError("sigma_action: missing permutation " + one_line(p));
  }

  if (!j.contains("partial_comp") || !j["partial_comp"].is_array()) throw LoadError("missing partial_comp");
  for (const auto& t : j["partial_comp"]) {
    int n = detail::read_int(t, "n", "partial_comp");
    int i = detail::read_int(t, "i", "partial_comp");
    int m = detail::read_int(t, "m", "partial_comp");
    if (n < 1 || m < 1 || n + m - 1 > max_arity || i < 1 || i > n)
      throw LoadError("partial_comp: bad indices n=" + std::to_string(n) + " i=" + std::to_string(i) +
                      " m=" + std::to_string(m));
    if (!t.contains("matrix")) throw LoadError("partial_comp: missing matrix");
    GradedSpace cols = tensor({comps[n - 1], comps[m - 1]});
    std::string where = "partial_comp n=" + std::to_string(n) + " i=" + std::to_string(i) + " m=" + std::to_string(m);
    op->set_partial(n, i - 1, m, detail::read_triples(t["matrix"], comps[n + m - 2], cols, where));
  }
  for (int n = 1; n <= max_arity; ++n)
    for (int m = 1; n + m - 1 <= max_arity; ++m)
      for (int i = 0; i < n; ++i)
        if (!op->has_partial(n, i, m))
          throw LoadError("partial_comp: missing table n=" + std::to_string(n) + " i=" + std::to_string(i + 1) +
                          " m=" + std::to_string(m));

  AxiomReport report = check_operad_axioms(*op, max_arity);
  if (!report.ok()) {
    std::string msg = "operad axioms violated:";
    for (std::size_t k = 0; k < std::min<std::size_t>(report.violations.size(), 5); ++k)
      msg += "\n  " + report.violations[k];
    throw LoadError(msg);
  }
  return op;
}

std::shared_ptr<const TableOperad> load_operad(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(path + ": " + e.what());
  }
  return operad_from_json(j);
}

}  // namespace kunneth
