#include <doctest.h>

#include "kunneth/graded.hpp"

using namespace kunneth;

namespace {

GradedSpace space(std::vector<int> degrees, const std::string& prefix = "e") {
  std::vector<BasisElement> b;
  for (std::size_t i = 0; i < degrees.size(); ++i) b.push_back({prefix + std::to_string(i), degrees[i]});
  return GradedSpace(std::move(b));
}

// Sign of sorting slot contents into their target positions by adjacent swaps.
int bubble_sign(const Permutation& perm, std::vector<int> degrees) {
  std::vector<int> target(perm.begin(), perm.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < target.size(); ++pass)
    for (std::size_t i = 0; i + 1 < target.size(); ++i)
      if (target[i] > target[i + 1]) {
        std::swap(target[i], target[i + 1]);
        if (degrees[i] % 2 && degrees[i + 1] % 2) sign = -sign;
        std::swap(degrees[i], degrees[i + 1]);
      }
  return sign;
}

}  // namespace

TEST_CASE("Koszul signs") {
  CHECK(koszul_sign(Permutation{1, 0}, std::vector<int>{1, 1}) == -1);
  CHECK(koszul_sign(Permutation{0, 1, 2}, std::vector<int>{1, 3, 5}) == 1);
  CHECK(koszul_sign(Permutation{1, 0}, std::vector<int>{0, 1}) == 1);
  for (int n = 1; n <= 4; ++n)
    for (const auto& perm : all_permutations(n))
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> degrees(n);
        for (int i = 0; i < n; ++i) degrees[i] = (mask >> i) & 1 ? 1 : 2;
        CHECK(koszul_sign(perm, degrees) == bubble_sign(perm, degrees));
      }
}

TEST_CASE("permutation helpers") {
  Permutation s{1, 2, 0};
  CHECK(compose(inverse(s), s) == identity_permutation(3));
  CHECK(order(s) == 3);
  CHECK(cycle_type(Permutation{1, 0, 2, 4, 3}) == std::vector<int>{2, 2, 1});
  CHECK(parse_one_line(one_line(s)) == s);
  CHECK(all_permutations(4).size() == 24);
  // compose(tau, sigma) applies sigma first.
  Permutation tau{1, 0, 2};
  CHECK(compose(tau, s) == Permutation{0, 2, 1});
}

TEST_CASE("tensor products of graded spaces") {
  GradedSpace one = space({0});
  GradedSpace v = space({0, 1});
  CHECK(tensor({v, one}).dims_by_degree() == v.dims_by_degree());
  CHECK(tensor({v, v}).dims_by_degree() == std::vector<std::size_t>{1, 2, 1});
  GradedSpace unit = tensor({});
  CHECK(unit.dim() == 1);
  CHECK(unit.degree(0) == 0);
  CHECK(tensor({v, space({})}).dim() == 0);
  CHECK(tensor({space({0}, "a"), space({1}, "b")})[0].label == "a0⊗b0");
}

TEST_CASE("symmetry isomorphisms of tensor products") {
  GradedSpace odd = space({1});
  GradedMap swap = permute_factors(tensor({odd, odd}), Permutation{1, 0});
  CHECK(swap.matrix().at(0, 0) == -1);

  GradedSpace v = space({0, 1});
  GradedSpace t = tensor({v, v, v});
  GradedMap id = permute_factors(t, Permutation{0, 1, 2});
  CHECK(id.matrix() == SparseMatrix::identity(t.dim()));

  // 3-cycle on degrees (1,1,0): the sign counts inverted pairs of odd slots.
  GradedSpace mixed = tensor({odd, odd, space({0})});
  CHECK(permute_factors(mixed, Permutation{1, 2, 0}).matrix().at(0, 0) == 1);
  CHECK(permute_factors(mixed, Permutation{2, 0, 1}).matrix().at(0, 0) == -1);

  // Applying a permutation and then its inverse is the identity.
  Permutation p{2, 0, 1};
  GradedMap there = permute_factors(t, p);
  GradedMap back = permute_factors(there.target(), inverse(p));
  CHECK(back.matrix() * there.matrix() == SparseMatrix::identity(t.dim()));
}

TEST_CASE("graded maps reject entries of mixed degree") {
  auto a = std::make_shared<const GradedSpace>(space({0}));
  auto b = std::make_shared<const GradedSpace>(space({1}));
  CHECK_THROWS_AS(GradedMap(a, b, SparseMatrix::identity(1)), std::invalid_argument);
  CHECK_NOTHROW(GradedMap(a, a, SparseMatrix::identity(1)));
}
