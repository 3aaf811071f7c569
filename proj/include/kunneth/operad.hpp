#pragma once

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kunneth/graded.hpp"
#include "kunneth/linalg.hpp"

namespace kunneth {

/// Reduced operad in graded vector spaces, presented by partial compositions.
///
/// Arities run from 1 to max_arity; component(1) is spanned by the unit (index 0).
/// `relabel(n, perm, a)` renames letter t of `a` to perm[t]; it is a left action,
/// so relabel by sigma then tau equals relabel by compose(tau, sigma).
/// `compose(n, i, m, a, b)` is a o_i b with a 0-based slot i, inserting the letters
/// of b at positions i..i+m-1 and shifting the later letters of a by m-1.
class Operad {
 public:
  Operad(std::string name, int max_arity) : name_(std::move(name)), max_arity_(max_arity) {}
  virtual ~Operad() = default;

  const std::string& name() const { return name_; }
  int max_arity() const { return max_arity_; }
  int unit() const { return 0; }

  virtual const GradedSpace& component(int n) const = 0;
  virtual SparseVec relabel(int n, std::span<const int> perm, int a) const = 0;
  virtual SparseVec compose(int n, int i, int m, int a, int b) const = 0;
  /// Bumped whenever the structure constants change; part of cache keys.
  virtual std::string table_version() const { return "1"; }

  SparseVec relabel(int n, std::span<const int> perm, const SparseVec& a) const;
  SparseVec compose(int n, int i, int m, const SparseVec& a, const SparseVec& b) const;
  int degree(int n, int a) const { return component(n).degree(a); }

 protected:
  void check_arity(int n) const;

 private:
  std::string name_;
  int max_arity_;
};

struct OperadElement {
  int arity = 1;
  SparseVec vector;
  friend bool operator==(const OperadElement&, const OperadElement&) = default;
};

/// The permutation of n + m - 1 letters induced on a o_i b by relabelling a
/// with sigma and b with tau; equivariance reads
/// relabel(pi, a o_i b) = relabel(sigma, a) o_{sigma[i]} relabel(tau, b).
Permutation block_permutation(const Permutation& sigma, int i, const Permutation& tau);

/// Collected axiom violations; empty means every checked instance holds.
struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Unit laws, group-action laws, equivariance, nested and disjoint associativity,
/// and degree preservation, on all basis elements with arities up to `arity_bound`.
AxiomReport check_operad_axioms(const Operad& o, int arity_bound);

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operad whose structure constants are stored tables (e.g. read from a file).
class TableOperad : public Operad {
 public:
  TableOperad(std::string name, int max_arity, std::vector<GradedSpace> components);

  const GradedSpace& component(int n) const override;
  SparseVec relabel(int n, std::span<const int> perm, int a) const override;
  SparseVec compose(int n, int i, int m, int a, int b) const override;

  /// columns[a] = image of basis element a.
  void set_sigma(int n, const Permutation& perm, std::vector<SparseVec> columns);
  /// columns[a * dim(m) + b] = a o_i b.
  void set_partial(int n, int i, int m, std::vector<SparseVec> columns);
  bool has_sigma(int n, const Permutation& perm) const;
  bool has_partial(int n, int i, int m) const;

 private:
  std::vector<GradedSpace> components_;  // index n-1
  std::map<std::pair<int, Permutation>, std::vector<SparseVec>> sigma_;
  std::map<std::tuple<int, int, int>, std::vector<SparseVec>> partial_;
};

/// Full tables of `o` up to its max_arity in the operad data format.
nlohmann::json operad_to_json(const Operad& o);
/// Parses, then runs check_operad_axioms; throws LoadError on parse errors or violations.
std::shared_ptr<const TableOperad> operad_from_json(const nlohmann::json& j);
std::shared_ptr<const TableOperad> load_operad(const std::string& path);

namespace detail {
nlohmann::json matrix_triples(const SparseVec& column, const std::string& col_label, const GradedSpace& rows);
/// Reads triples [row, col, num, den] into columns indexed by `cols`.
std::vector<SparseVec> read_triples(const nlohmann::json& triples, const GradedSpace& rows, const GradedSpace& cols,
                                    const std::string& where);
/// Components for arities from..to from an object keyed by arity strings.
std::vector<GradedSpace> read_components(const nlohmann::json& comps, int from, int to);
int read_int(const nlohmann::json& j, const char* key, const std::string& where);
}  // namespace detail

}  // namespace kunneth
