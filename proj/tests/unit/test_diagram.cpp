#include <doctest.h>

#include "tensorwalks/closed_forms.hpp"
#include "tensorwalks/diagram.hpp"

using namespace tensorwalks;

namespace {

const std::vector<int> kRadii{2, 3, 2, 5};
const Word kGamma{3, 4, 4, 1, 4, 4, 2, 4, 3, 4, 4, 2};
const Word kBeta{2, 4, 1, 3, 1, 2, 2, 4, 1, 2, 2, 3};
const Word kEta{2, 3, 2, 1, 4, 2, 4, 2, 3, 3, 2, 3};

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("basis sizes") {
    CHECK(enumerate_basis({4, 2}, 6, std::vector<int>{1, 1}).size() == 144);
    CHECK(enumerate_basis({4, 2}, 6).size() == 1056);
    CHECK(count_basis({4, 2}, 6) == 1056);
    const auto one = enumerate_basis({2}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].bottom == Word{1});
    CHECK(one[0].top == Word{1});
    const auto basis = enumerate_basis({2, 3}, 3);
    for (std::size_t i = 1; i < basis.size(); ++i)
      CHECK(std::make_pair(basis[i - 1].bottom, basis[i - 1].top) < std::make_pair(basis[i].bottom, basis[i].top));
  }

  TEST_CASE("worked composition") {
    const DiagramElement lower{kRadii, kGamma, kBeta};
    const DiagramElement upper{kRadii, kBeta, kEta};
    const auto e = compose(upper, lower);
    REQUIRE(e);
    CHECK(e->bottom == kGamma);
    CHECK(e->top == kEta);
    CHECK_FALSE(compose(lower, lower));
    const DiagramElement id{kRadii, kGamma, kGamma};
    CHECK(compose(lower, id) == lower);
    CHECK_THROWS(compose(lower, DiagramElement{{2, 2, 2, 2}, kGamma, kBeta}));
  }

  TEST_CASE("validity") {
    CHECK(validate(DiagramElement{kRadii, kGamma, kBeta}));
    CHECK_FALSE(validate(DiagramElement{{2, 2, 2, 2}, kGamma, kBeta}));
    CHECK(validate(DiagramElement{{2, 3}, {}, {}}));
  }

  TEST_CASE("action on tensors") {
    const DiagramElement e{kRadii, kGamma, kBeta};
    CHECK(action_on_tensor(e, kGamma) == kBeta);
    CHECK_FALSE(action_on_tensor(e, kEta));
    const DiagramElement id{kRadii, kEta, kEta};
    CHECK(action_on_tensor(id, kEta) == kEta);
  }

  TEST_CASE("rendering") {
    const DiagramElement e{{2, 3}, {1, 2, 1}, {2, 1, 1}};
    CHECK(render_text(e) == "top:    2 1 1\nbottom: 1 2 1\nblocks: 1={t2,t3,b1,b3} 2={t1,b2}\n");
    const std::string dot = render_dot(e);
    CHECK(dot.rfind("graph E {", 0) == 0);
    CHECK(dot.find("t2 -- t3;") != std::string::npos);
    CHECK(dot.find("t1 -- b2;") != std::string::npos);
    const std::string empty = render_text(DiagramElement{{2}, {}, {}});
    CHECK(empty == "top:    \nbottom: \nblocks:\n");
  }

  TEST_CASE("basis size equals the sum of squared walk counts") {
    for (const auto& radii : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {4, 4}, {2, 2, 2, 2}})
      for (unsigned k = 0; k <= 5; ++k) {
        Count want = 0;
        std::vector<int> c(radii.size(), 0);
        for (;;) {
          const Count d = abelian_walks(radii, k, c);
          want += d * d;
          std::size_t j = 0;
          while (j < c.size() && ++c[j] == radii[j]) c[j++] = 0;
          if (j == c.size()) break;
        }
        CHECK(count_basis(radii, k) == want);
      }
  }

  TEST_CASE("equivariance") {
    CHECK(equivariance_check({4, 2}, 3));
    CHECK(equivariance_check({2, 3, 2}, 2));
  }
}
