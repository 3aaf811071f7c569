#include <doctest.h>

#include "kunneth/module.hpp"
#include "kunneth/operads.hpp"
#include "support.hpp"

using namespace kunneth;

namespace {

SparseVec basis(int index) { return {{index, Scalar(1)}}; }

// Parses "t(1,3,2)" into its class and 1-based cyclic word.
std::pair<char, std::vector<int>> parse_circle(const std::string& label) {
  std::vector<int> word;
  int v = 0;
  for (std::size_t c = 2; c < label.size(); ++c) {
    if (label[c] == ',' || label[c] == ')') {
      word.push_back(v);
      v = 0;
    } else {
      v = v * 10 + (label[c] - '0');
    }
  }
  return {label[0], word};
}

std::string circle_label(char cls, const std::vector<int>& word) {
  std::string s(1, cls);
  s += "(";
  for (std::size_t t = 0; t < word.size(); ++t) s += (t ? "," : "") + std::to_string(word[t]);
  return s + ")";
}

}  // namespace

TEST_CASE("circle module and the associative operad as a module satisfy the axioms") {
  auto ass = std::make_shared<AssOperad>(4);
  for (const auto& m : {circle_module(ass), module_from_operad(ass)}) {
    AxiomReport r = check_module_axioms(*m, 4);
    for (const auto& v : r.violations) INFO(v);
    CHECK(r.ok());
    CHECK(m->component(0).dim() == 1);
  }
  auto circle = circle_module(ass);
  CHECK(circle->component(3).dim() == 4);
  CHECK(circle->component(3).dims_by_degree() == std::vector<std::size_t>{2, 2});
  CHECK(circle->free_generators() == nullptr);
  REQUIRE(module_from_operad(ass)->free_generators() != nullptr);
}

TEST_CASE("circle insertion matches the cyclic oracle") {
  auto ass = std::make_shared<AssOperad>(5);
  auto circle = circle_module(ass);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; n + m - 1 <= 5; ++m)
      for (int i = 0; i < n; ++i)
        for (int x = 0; x < static_cast<int>(circle->component(n).dim()); ++x)
          for (int a = 0; a < static_cast<int>(ass->component(m).dim()); ++a) {
            auto [cls, cyc] = parse_circle(circle->component(n)[x].label);
            std::vector<int> w;
            for (int v : ass->word(m, a)) w.push_back(v + 1);
            std::string expected = circle_label(cls, testing::cyclic_insert(cyc, i + 1, w));
            SparseVec got = circle->act_partial(n, i, m, x, a);
            REQUIRE(got.size() == 1);
            CHECK(got[0].second == 1);
            CHECK(circle->component(n + m - 1)[got[0].first].label == expected);
          }
}

TEST_CASE("circle insertion examples") {
  auto ass = std::make_shared<AssOperad>(3);
  auto circle = circle_module(ass);
  const GradedSpace& c2 = circle->component(2);
  const GradedSpace& c3 = circle->component(3);
  int e12 = c2.index_of("e(1,2)");
  int t12 = c2.index_of("t(1,2)");
  int w12 = ass->index_of(Permutation{0, 1});
  int w21 = ass->index_of(Permutation{1, 0});
  CHECK(c3[circle->act_partial(2, 0, 2, e12, w12)[0].first].label == "e(1,2,3)");
  // Collapsing points 1 and 2 of t(1,2) in the opposite order.
  CHECK(c3[circle->act_partial(2, 0, 2, t12, w21)[0].first].label == "t(1,3,2)");
}

TEST_CASE("action of morphisms") {
  auto ass = std::make_shared<AssOperad>(4);
  auto circle = circle_module(ass);
  const Operad& o = *ass;
  for (int k = 0; k <= 3; ++k)
    for (int x = 0; x < static_cast<int>(circle->component(k).dim()); ++x)
      CHECK(act(*circle, basis(x), identity_morphism(k)) == basis(x));

  // Functoriality: x.(g o f) = (x.g).f.
  for (const auto& f : morphisms_from(o, 4))
    for (const auto& g : morphisms_from(o, f.target())) {
      MorphismCombination gf = compose_morphisms(o, f, g);
      for (int x = 0; x < static_cast<int>(circle->component(g.target()).dim()); ++x) {
        SparseVec lhs;
        for (const auto& [h, c] : gf) axpy(lhs, c, act(*circle, basis(x), h));
        canonicalize(lhs);
        CHECK(lhs == act(*circle, act(*circle, basis(x), g), f));
      }
    }
}

TEST_CASE("morphism enumeration matches the count of decorated surjections") {
  AssOperad ass(5);
  for (int k = 1; k <= 5; ++k) {
    std::map<int, std::size_t> by_target;
    for (const auto& f : morphisms_from(ass, k)) ++by_target[f.target()];
    for (int n = 1; n <= k; ++n) CHECK(by_target[n] == testing::ass_morphism_count(k, n));
  }
  CHECK(morphisms_from(ass, 0).size() == 1);
  GerOperad ger(3);
  std::size_t degree0 = morphisms_from(ger, 3, 0).size();
  // Degree-0 Ger decorations are products, one per fiber: the set partitions of [3]
  // with each surjection counted once.
  CHECK(degree0 == 13);
}

TEST_CASE("module data round trip and corruption") {
  auto ass = std::make_shared<AssOperad>(3);
  auto circle = circle_module(ass);
  nlohmann::json j = module_to_json(*circle);
  auto loaded = module_from_json(j, ass);
  CHECK(module_to_json(*loaded) == j);

  nlohmann::json bad = j;
  bool changed = false;
  for (auto& entry : bad["partial_action"])
    if (entry["n"] == 2 && entry["i"] == 1 && entry["m"] == 2)
      for (auto& t : entry["matrix"])
        if (t[1] == "e(1,2)⊗[1,2]") {
          t[0] = "e(1,3,2)";
          changed = true;
        }
  REQUIRE(changed);
  CHECK_THROWS_AS(module_from_json(bad, ass), LoadError);

  nlohmann::json wrong_base = j;
  wrong_base["over"] = "Ger";
  CHECK_THROWS_AS(module_from_json(wrong_base, ass), LoadError);
}
