#pragma once

#include <climits>
#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "kunneth/operad.hpp"

namespace kunneth {

/// Morphism [k] -> [n] of the category of operators of a reduced operad O:
/// a surjection together with one basis element of O(|fiber|) per target point.
/// Fibers are identified with standard sets by increasing enumeration.
struct Morphism {
  std::vector<int> map;          // source point -> target point
  std::vector<int> decorations;  // target point -> basis index in O(|fiber|)

  int source() const { return static_cast<int>(map.size()); }
  int target() const { return static_cast<int>(decorations.size()); }
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

using MorphismCombination = std::vector<std::pair<Morphism, Scalar>>;

Morphism identity_morphism(int n);
/// The bijection sending point t to perm[t], with unit decorations.
Morphism bijection_morphism(const Permutation& perm);
bool is_identity(const Morphism& f);
std::vector<std::vector<int>> fibers(const Morphism& f);
int morphism_degree(const Operad& o, const Morphism& f);
std::string morphism_label(const Operad& o, const Morphism& f);

/// second o first.  Each fiber of the composite is decorated by the operadic
/// composite of the second decoration with the first decorations over it,
/// relabelled to increasing order, with the Koszul sign of interleaving them.
MorphismCombination compose_morphisms(const Operad& o, const Morphism& first, const Morphism& second);

/// All morphisms out of [k] with total degree at most max_degree, in a fixed order:
/// by target size, then surjection (lexicographic), then decorations.
std::vector<Morphism> morphisms_from(const Operad& o, int k, int max_degree = INT_MAX);
/// Surjections [k] -> [n] in lexicographic order.
std::vector<std::vector<int>> surjections(int k, int n);

/// Right module over a reduced operad, with components in arities 0..max_arity.
/// Arity 0 is one-dimensional and only the identity of [0] acts on it.
class RightModule {
 public:
  RightModule(std::string name, std::shared_ptr<const Operad> over, int max_arity)
      : name_(std::move(name)), over_(std::move(over)), max_arity_(max_arity) {}
  virtual ~RightModule() = default;

  const std::string& name() const { return name_; }
  const Operad& over() const { return *over_; }
  std::shared_ptr<const Operad> over_ptr() const { return over_; }
  int max_arity() const { return max_arity_; }

  virtual const GradedSpace& component(int k) const = 0;
  /// Renames letter t to perm[t]; left action as for operads.
  virtual SparseVec relabel(int k, std::span<const int> perm, int x) const = 0;
  /// x o_i a for x in M(n), a in O(m), 0-based slot i.
  virtual SparseVec act_partial(int n, int i, int m, int x, int a) const = 0;
  /// Generators of a presentation M = F(X) as a free module, one space per arity,
  /// or nullptr when no such presentation is known.
  virtual const std::vector<GradedSpace>* free_generators() const { return nullptr; }

  SparseVec relabel(int k, std::span<const int> perm, const SparseVec& x) const;
  SparseVec act_partial(int n, int i, int m, const SparseVec& x, const SparseVec& a) const;
  int degree(int k, int x) const { return component(k).degree(x); }

 protected:
  void check_arity(int k) const;

 private:
  std::string name_;
  std::shared_ptr<const Operad> over_;
  int max_arity_;
};

/// x . f for x in M(f.target()); the result lies in M(f.source()).
SparseVec act(const RightModule& m, const SparseVec& x, const Morphism& f);

/// O regarded as a right module over itself, plus the empty configuration in arity 0.
/// It is free on one generator in arity 1 (and one in arity 0).
std::shared_ptr<const RightModule> module_from_operad(std::shared_ptr<const Operad> o);

/// Homology of configurations on a circle as a right module over Ass:
/// in arity k >= 1, the cyclic orders of 1..k, each tensored with the
/// homology of the circle (e in degree 0, t in degree 1).  Labels like "t(1,3,2)".
std::shared_ptr<const RightModule> circle_module(std::shared_ptr<const Operad> ass);

/// Module whose structure constants are stored tables.
class TableModule : public RightModule {
 public:
  TableModule(std::string name, std::shared_ptr<const Operad> over, int max_arity,
              std::vector<GradedSpace> components);

  const GradedSpace& component(int k) const override;
  SparseVec relabel(int k, std::span<const int> perm, int x) const override;
  SparseVec act_partial(int n, int i, int m, int x, int a) const override;

  void set_sigma(int k, const Permutation& perm, std::vector<SparseVec> columns);
  void set_partial(int n, int i, int m, std::vector<SparseVec> columns);
  bool has_sigma(int k, const Permutation& perm) const;
  bool has_partial(int n, int i, int m) const;

 private:
  std::vector<GradedSpace> components_;  // index k
  std::map<std::pair<int, Permutation>, std::vector<SparseVec>> sigma_;
  std::map<std::tuple<int, int, int>, std::vector<SparseVec>> partial_;
};

/// Unit, group action, equivariance, nested and disjoint associativity of the
/// partial actions, and degree preservation, for arities up to `arity_bound`.
AxiomReport check_module_axioms(const RightModule& m, int arity_bound);

nlohmann::json module_to_json(const RightModule& m);
/// The "over" field must name `over`; the axioms are checked before returning.
std::shared_ptr<const TableModule> module_from_json(const nlohmann::json& j, std::shared_ptr<const Operad> over);
std::shared_ptr<const TableModule> load_module(const std::string& path, std::shared_ptr<const Operad> over);

}  // namespace kunneth
