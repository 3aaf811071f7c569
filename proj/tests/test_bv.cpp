#include <doctest.h>

#include "kunneth/bv.hpp"
#include "kunneth/operads.hpp"
#include "support.hpp"

using namespace kunneth;

namespace {

struct Setup {
  std::shared_ptr<const AssOperad> ass;
  std::shared_ptr<const GerOperad> ger;
  std::shared_ptr<const RightModule> line, circle;

  explicit Setup(int arity)
      : ass(std::make_shared<AssOperad>(arity)),
        ger(std::make_shared<GerOperad>(arity)),
        line(module_from_operad(ass)),
        circle(circle_module(ass)) {}

  Diagonal make(bool left_circle, bool right_circle, Resolution line_res = Resolution::Bar) const {
    DiagFactor l{left_circle ? circle : line, left_circle ? Resolution::Bar : line_res};
    DiagFactor r{right_circle ? circle : line, right_circle ? Resolution::Bar : line_res};
    return Diagonal(l, r, ger);
  }
};

void report(const std::vector<std::string>& failures) {
  for (const auto& f : failures) INFO(f);
  CHECK(failures.empty());
}

std::vector<GradedSpace> components(const RightModule& m, int top) {
  std::vector<GradedSpace> out;
  for (int n = 0; n <= top; ++n) out.push_back(m.component(n));
  return out;
}

}  // namespace

TEST_CASE("sequence tensor product") {
  Setup s(4);
  auto x = components(*s.line, 4);
  CHECK(sequence_tensor(x, x, 0).dim() == 1);
  CHECK(sequence_tensor(x, x, 1).dim() == 1);
  CHECK(sequence_tensor(x, x, 2).dim() == 4);
  CHECK(sequence_tensor(x, x, 3).dim() == 12);
  // Splits 1*4, 2*2, 4*1: 24 + 4 + 24.
  CHECK(sequence_tensor(x, x, 4).dim() == 52);
  CHECK(sequence_tensor(x, x, 2)[0].label == "(1,2|[1]|[1,2])");

  auto c = components(*s.circle, 4);
  // Degrees add: (1,2) and (2,1) each give e(1,2), t(1,2) on one side.
  CHECK(sequence_tensor(c, c, 2).dims_by_degree() == std::vector<std::size_t>{2, 4, 2});
}

TEST_CASE("diagonal in arities 0 and 1") {
  Setup s(3);
  for (Resolution res : {Resolution::Bar, Resolution::Free}) {
    Diagonal d = s.make(false, false, res);
    CHECK(DiagLevel(d, 0, 1, true).size() == 1);
    CHECK(DiagLevel(d, 0, 0, true).size() == 1);
    for (int p = 0; p <= 3; ++p) CHECK(DiagLevel(d, p, 0, false).size() == 1);
  }
  Diagonal bar = s.make(false, false);
  for (int p = 1; p <= 3; ++p) {
    CHECK(DiagLevel(bar, p, 0, true).size() == 0);
    CHECK(DiagLevel(bar, p, 1, true).size() == 0);
  }
  // The torus in arity 1: level 0 is H(S^1) (x) H(S^1).
  Diagonal torus = s.make(true, true);
  CHECK(DiagLevel(torus, 0, 1, true).space().dims_by_degree() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("unnormalized diagonal sizes match the layer count") {
  Setup s(4);
  Diagonal d = s.make(false, false);
  for (int k = 0; k <= 3; ++k)
    for (int p = 0; p <= 2; ++p) {
      CAPTURE(k);
      CAPTURE(p);
      CHECK(DiagLevel(d, p, k, false).size() == testing::ass_diag_count(p, k));
    }
}

TEST_CASE("diagonal sizes match the independent count") {
  Setup s(3);
  for (bool lc : {false, true})
    for (bool rc : {false, true})
      for (Resolution res : {Resolution::Bar, Resolution::Free}) {
        Diagonal d = s.make(lc, rc, res);
        for (int k = 0; k <= 3; ++k)
          for (int p = 0; p <= 2; ++p)
            for (bool normalized : {true, false})
              for (int bound : {0, 1, 2}) {
                CAPTURE(k);
                CAPTURE(p);
                CHECK(DiagLevel(d, p, k, normalized, bound).size() == diag_level_count(d, p, k, normalized, bound));
              }
      }
}

TEST_CASE("interchange face") {
  Setup s(2);
  Diagonal d = s.make(false, false);
  int w12 = s.ass->index_of(Permutation{0, 1});
  Morphism collapse{{0, 0}, {w12}};
  Chain x{2, {collapse}, 0};
  Chain y{1, {identity_morphism(1)}, 0};
  DiagWord w{identity_morphism(2), 2, 1, x, y};
  DiagCombination d0 = d.face(1, 0, w);
  REQUIRE(d0.size() == 1);
  Morphism outer{{0, 0}, {s.ger->product_monomial(2)}};
  CHECK(d0[0].first == DiagWord{outer, 1, 1, Chain{1, {}, 0}, Chain{1, {}, 0}});
  CHECK(d0[0].second == 1);
  // d_1 lets the layers act on the terminal elements.
  DiagCombination d1 = d.face(1, 1, w);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].first == DiagWord{identity_morphism(2), 2, 1, Chain{2, {}, w12}, Chain{1, {}, 0}});
}

TEST_CASE("simplicial identities of the diagonal") {
  Setup s(3);
  report(testing::diagonal_identity_failures(s.make(false, false), 2, 3, 2));
  report(testing::diagonal_identity_failures(s.make(false, false), 3, 2, 2));
  report(testing::diagonal_identity_failures(s.make(false, true), 2, 2, 2));
  report(testing::diagonal_identity_failures(s.make(true, true), 2, 2, 2));
  report(testing::diagonal_identity_failures(s.make(false, false, Resolution::Free), 3, 2, 2));
}

TEST_CASE("diagonal faces are equivariant") {
  Setup s(3);
  report(testing::diagonal_equivariance_failures(s.make(false, false), 3, 2, 2));
  report(testing::diagonal_equivariance_failures(s.make(true, true), 2, 2, 2));
  report(testing::diagonal_equivariance_failures(s.make(true, false), 3, 1, 1));
}

TEST_CASE("diagonal differential squares to zero") {
  Setup s(3);
  for (bool normalized : {true, false}) {
    Diagonal d = s.make(true, false);
    std::vector<DiagLevel> levels;
    for (int p = 0; p <= 3; ++p) levels.emplace_back(d, p, 2, normalized, 2);
    for (int q = 0; q <= 2; ++q)
      for (int p = 2; p <= 3; ++p)
        CHECK((diag_differential(d, levels[p - 1], levels[p - 2], q) * diag_differential(d, levels[p], levels[p - 1], q))
                  .is_zero());
  }
}

TEST_CASE("factors must be over an operad in degree 0") {
  Setup s(2);
  auto ger_module = module_from_operad(s.ger);
  CHECK_THROWS_AS(Diagonal({ger_module, Resolution::Bar}, {s.line, Resolution::Bar}, s.ger), std::invalid_argument);
  CHECK_THROWS_AS(Diagonal({s.circle, Resolution::Free}, {s.line, Resolution::Bar}, s.ger), std::invalid_argument);
}
