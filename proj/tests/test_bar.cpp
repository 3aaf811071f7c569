#include <doctest.h>

#include "kunneth/bar.hpp"
#include "kunneth/operads.hpp"
#include "support.hpp"

using namespace kunneth;

namespace {

SparseVec basis(int index) { return {{index, Scalar(1)}}; }

void report(const std::vector<std::string>& failures) {
  for (const auto& f : failures) INFO(f);
  CHECK(failures.empty());
}

}  // namespace

TEST_CASE("bar level sizes match layer counts") {
  auto ass = std::make_shared<AssOperad>(4);
  auto m = module_from_operad(ass);
  for (int k = 0; k <= 4; ++k)
    for (int p = 0; p <= (k <= 3 ? 3 : 2); ++p)
      for (bool normalized : {true, false}) {
        CAPTURE(k);
        CAPTURE(p);
        CAPTURE(normalized);
        CHECK(BarLevel(*m, p, k, normalized).size() == testing::ass_bar_count(p, k, normalized));
      }
}

TEST_CASE("small bar levels") {
  auto ass = std::make_shared<AssOperad>(3);
  auto m = module_from_operad(ass);
  BarLevel unit(*m, 0, 1, true);
  REQUIRE(unit.size() == 1);
  CHECK(unit.word(0).layers == std::vector<Morphism>{identity_morphism(1)});

  for (int p = 0; p <= 3; ++p) {
    CHECK(BarLevel(*m, p, 0, false).size() == 1);
    CHECK(BarLevel(*m, p, 0, true).size() == (p == 0 ? 1u : 0u));
  }
  // Level 0 in arity 2: two collapses to [1] times Ass(1), plus two bijections
  // of [2] times Ass(2).
  CHECK(BarLevel(*m, 0, 2, true).size() == 6);
}

TEST_CASE("bar faces") {
  auto ass = std::make_shared<AssOperad>(2);
  auto m = module_from_operad(ass);
  int w21 = ass->index_of(Permutation{1, 0});
  Morphism collapse{{0, 0}, {w21}};
  Chain c{2, {identity_morphism(2), collapse}, 0};
  auto d0 = bar_face(*m, c, 0);
  auto d1 = bar_face(*m, c, 1);
  REQUIRE(d0.size() == 1);
  REQUIRE(d1.size() == 1);
  CHECK(d0[0] == std::pair<Chain, Scalar>{Chain{2, {collapse}, 0}, Scalar(1)});
  CHECK(d1[0] == std::pair<Chain, Scalar>{Chain{2, {identity_morphism(2)}, w21}, Scalar(1)});
  CHECK(is_degenerate(c) == false);
  Chain s = bar_degeneracy(Chain{2, {collapse}, 0}, 0);
  CHECK(s == Chain{2, {collapse, identity_morphism(1)}, 0});
  CHECK(is_degenerate(s));
  // Level 0 augments by acting with the single layer.
  CHECK(augmentation(*m, Chain{2, {collapse}, 0}) == basis(w21));
}

TEST_CASE("augmentation acts by the single layer") {
  auto ass = std::make_shared<AssOperad>(3);
  for (const auto& m : {module_from_operad(ass), circle_module(ass)}) {
    BarLevel level(*m, 0, 3, true);
    for (const auto& w : level.words())
      CHECK(augmentation(*m, w) == act(*m, basis(w.terminal), w.layers[0]));
  }
}

TEST_CASE("simplicial identities of the bar construction") {
  auto ass = std::make_shared<AssOperad>(3);
  for (const auto& m : {module_from_operad(ass), circle_module(ass)}) {
    for (int k = 0; k <= 2; ++k) report(testing::bar_identity_failures(*m, k, 3));
    report(testing::bar_identity_failures(*m, 3, 2));
  }
}

TEST_CASE("bar construction is acyclic") {
  auto ass = std::make_shared<AssOperad>(3);
  for (const auto& m : {module_from_operad(ass), circle_module(ass)})
    for (int k = 0; k <= 3; ++k) {
      CAPTURE(k);
      report(testing::bar_acyclicity_failures(*m, k, 3));
    }
}

TEST_CASE("bar differential squares to zero") {
  auto ass = std::make_shared<AssOperad>(3);
  auto m = circle_module(ass);
  for (bool normalized : {true, false}) {
    std::vector<BarLevel> levels;
    for (int p = 0; p <= 3; ++p) levels.emplace_back(*m, p, 3, normalized);
    for (int p = 2; p <= 3; ++p)
      CHECK((bar_differential(*m, levels[p - 1], levels[p - 2]) * bar_differential(*m, levels[p], levels[p - 1])).is_zero());
    CHECK((augmentation_matrix(*m, levels[0]) * bar_differential(*m, levels[1], levels[0])).is_zero());
  }
}
