#include <cmath>

#include "adsgeo/models.hpp"
#include "doctest.h"

using namespace ads;

namespace {
void check_vec(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]));
}
}  // namespace

TEST_CASE("normal forms") {
  check_vec(eval_normal_form(SingularityLabel::A2_CuspidalEdge, {1, 0, 0}), {3, 2, 0, 0});
  check_vec(eval_normal_form(SingularityLabel::D4_Plus, {1, 1, 0}), {4, 3, 3, 0});
  check_vec(eval_normal_form(SingularityLabel::A3_Swallowtail, {0, 0, 0}), {0, 0, 0, 0});
  CHECK_THROWS_AS(eval_normal_form(SingularityLabel::A2_CuspidalEdge, {1, 0}), ArityError);
}

TEST_CASE("normal form Jacobians against central differences") {
  const double h = 1e-6;
  for (auto l : {SingularityLabel::A2_CuspidalEdge, SingularityLabel::A3_Swallowtail, SingularityLabel::A4_Butterfly,
                 SingularityLabel::D4_Plus, SingularityLabel::D4_Minus}) {
    std::vector<double> u{0.3, -0.7, 0.45};
    Eigen::MatrixXd J = normal_form_jacobian(l, u);
    for (int c = 0; c < 3; ++c) {
      auto up = u, um = u;
      up[c] += h;
      um[c] -= h;
      auto fp = eval_normal_form(l, up), fm = eval_normal_form(l, um);
      for (int r = 0; r < 4; ++r) CHECK(J(r, c) == doctest::Approx((fp[r] - fm[r]) / (2 * h)).epsilon(1e-6));
    }
  }
}

TEST_CASE("model singular sets") {
  check_vec(eval_model_singular_set(ModelSet::SigmaPU, {2}), {10.0 / 27, 1, 1, 2});
  check_vec(eval_model_singular_set(ModelSet::C234, {2}), {4, 8, 16});
  check_vec(eval_model_singular_set(ModelSet::C2345, {0}), {0, 0, 0, 0});
  check_vec(eval_model_singular_set(ModelSet::C23, {-1}), {1, -1});
  CHECK_THROWS(eval_model_singular_set(ModelSet::SigmaPY, {3, 1}));
  CHECK_THROWS_AS(eval_model_singular_set(ModelSet::C234, {1, 2}), ArityError);
  CHECK(model_set_from_string("SigmaPU") == ModelSet::SigmaPU);
}

TEST_CASE("label names") {
  CHECK(label_from_string("A2") == SingularityLabel::A2_CuspidalEdge);
  CHECK(label_from_string("D4+") == SingularityLabel::D4_Plus);
  CHECK(label_from_string("A4_Butterfly") == SingularityLabel::A4_Butterfly);
  CHECK_THROWS_AS(label_from_string("E6"), InputError);
  CHECK(ak_index(SingularityLabel::A3_Swallowtail) == 3);
  CHECK(label_for_ak(2) == SingularityLabel::A2_CuspidalEdge);
}

TEST_CASE("brute-force critical sets on coarse grids") {
  BruteGrid box{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}, 0.05};
  CHECK(brute_force_critical_set(SingularityLabel::A1_Regular, box).empty());
  auto cusp = brute_force_critical_set(SingularityLabel::A2_CuspidalEdge, box);
  REQUIRE(cusp.size() > 100);
  for (const auto& p : cusp) CHECK(std::abs(p.domain[0]) < 1e-9);
  auto d4 = brute_force_critical_set(SingularityLabel::D4_Plus, box);
  REQUIRE(d4.size() > 100);
  for (const auto& p : d4) CHECK(std::abs(p.domain[2] * p.domain[2] - 36 * p.domain[0] * p.domain[1]) < 1e-8);
  BruteGrid flat{{-0.5, -0.5}, {0.5, 0.5}, 0.05};
  CHECK_THROWS_AS(brute_force_critical_set(SingularityLabel::A2_CuspidalEdge, flat), GridError);
}

TEST_CASE("Hausdorff distance") {
  std::vector<std::vector<double>> a{{0, 0}, {1, 0}}, b{{0, 0}, {1, 0}, {1, 0.5}};
  CHECK(hausdorff(a, a) == 0);
  CHECK(hausdorff(a, b) == doctest::Approx(0.5));
  CHECK(directed_hausdorff(a, b) == 0);
  CHECK(directed_hausdorff(b, a) == doctest::Approx(0.5));
}
