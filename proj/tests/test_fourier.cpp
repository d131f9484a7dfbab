#include <doctest.h>

#include <cmath>
#include <complex>

#include "liepdo/fourier.hpp"
#include "liepdo/harness.hpp"

using namespace liepdo;
using cd = std::complex<double>;

namespace {

GroupFunction sample(const GridPtr& grid, const std::function<cd(const double*)>& fn) {
  GroupFunction f;
  f.grid = grid;
  f.values = Eigen::VectorXcd(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) f.values(i) = fn(grid->node(i));
  return f;
}

double sup_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("forward transform of single characters on T^1") {
  auto grid = grid_torus(1, 8.0, 2.0);
  auto f = sample(grid, [](const double* x) { return std::exp(cd(0, 2 * x[0])); });
  auto c = forward_transform(f, 8.0);
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    double expect = (c.indices[i].label[0] == 2) ? 1.0 : 0.0;
    CHECK(std::abs(c.blocks[i](0, 0) - expect) < 1e-12);
  }
}

TEST_CASE("constant function on SO(3) concentrates at the trivial representation") {
  auto grid = grid_so3(4, 2.0);
  auto f = sample(grid, [](const double*) { return cd(1, 0); });
  auto c = forward_transform(f, 4.0);
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    if (c.indices[i].label[0] == 0)
      CHECK(std::abs(c.blocks[i](0, 0) - 1.0) < 1e-12);
    else
      CHECK(c.blocks[i].cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Schur orthogonality pins the coefficient of a matrix-coefficient function") {
  Group g = Group::so3();
  auto grid = grid_so3(3, 2.0);
  // f = d_1 * conj(D^1_00) = 3 D^1_00; its only coefficient is 1 at l=1,(0,0)
  auto f = sample(grid, [&](const double* x) {
    return 3.0 * std::conj(rep_eval(g, x, {Backend::SO3, {1}})(1, 1));
  });
  auto c = forward_transform(f, 3.0);
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    int l = c.indices[i].label[0];
    for (int r = 0; r < 2 * l + 1; ++r)
      for (int col = 0; col < 2 * l + 1; ++col) {
        double expect = (l == 1 && r == 1 && col == 1) ? 1.0 : 0.0;
        CHECK(std::abs(c.blocks[i](r, col) - expect) < 1e-10);
      }
  }
}

TEST_CASE("inverse transform of delta coefficients") {
  // trivial-representation delta gives the constant function 1
  auto grid = grid_so3(2, 2.0);
  auto c = zero_coefficients(Group::so3(), 2.5);
  c.find({Backend::SO3, {0}})->operator()(0, 0) = 1.0;
  auto f = inverse_transform(c, grid);
  for (std::size_t i = 0; i < grid->size(); ++i) CHECK(std::abs(f.values(i) - 1.0) < 1e-13);

  // single torus coefficient at k=3 gives e^{i3x}
  auto tgrid = grid_torus(1, 4.0, 2.0);
  auto tc = zero_coefficients(Group::torus(1), 4.0);
  tc.find({Backend::Torus, {3}})->operator()(0, 0) = 1.0;
  auto tf = inverse_transform(tc, tgrid);
  for (std::size_t i = 0; i < tgrid->size(); ++i)
    CHECK(std::abs(tf.values(i) - std::exp(cd(0, 3 * tgrid->node(i)[0]))) < 1e-13);
}

TEST_CASE("round trip on random band-limited functions") {
  SUBCASE("torus-1") {
    Group g = Group::torus(1);
    auto grid = grid_torus(1, 16.0, 2.0);
    auto f = random_bandlimited(g, grid, 123, 16.0);
    auto back = inverse_transform(forward_transform(f, 16.0), grid);
    CHECK(sup_diff(back.values, f.values) < 1e-9 * f.values.cwiseAbs().maxCoeff());
  }
  SUBCASE("torus-2") {
    Group g = Group::torus(2);
    auto grid = grid_torus(2, 6.0, 2.0);
    auto f = random_bandlimited(g, grid, 5, 6.0);
    auto back = inverse_transform(forward_transform(f, 6.0), grid);
    CHECK(sup_diff(back.values, f.values) < 1e-9 * f.values.cwiseAbs().maxCoeff());
  }
  SUBCASE("so3") {
    Group g = Group::so3();
    auto grid = grid_so3(6, 2.0);
    double lam = grid->exactness_band;
    auto f = random_bandlimited(g, grid, 42, lam);
    auto back = inverse_transform(forward_transform(f, lam), grid);
    CHECK(sup_diff(back.values, f.values) < 1e-9 * f.values.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("Plancherel identity") {
  SUBCASE("single character") {
    auto grid = grid_torus(1, 8.0, 2.0);
    auto f = sample(grid, [](const double* x) { return std::exp(cd(0, 5 * x[0])); });
    CHECK(plancherel_norm(forward_transform(f, 8.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("sqrt(3) conj(D^1_00) has unit L^2 norm") {
    Group g = Group::so3();
    auto grid = grid_so3(3, 2.0);
    auto f = sample(grid, [&](const double* x) {
      return std::sqrt(3.0) * std::conj(rep_eval(g, x, {Backend::SO3, {1}})(1, 1));
    });
    CHECK(plancherel_norm(forward_transform(f, 3.0)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("random band-limited, both backends") {
    Group gt = Group::torus(1);
    auto tgrid = grid_torus(1, 12.0, 2.0);
    auto ft = random_bandlimited(gt, tgrid, 99, 12.0);
    double grid_l2 = 0;
    for (std::size_t i = 0; i < tgrid->size(); ++i)
      grid_l2 += tgrid->weights[i] * std::norm(ft.values(i));
    grid_l2 = std::sqrt(grid_l2);
    double pl = plancherel_norm(forward_transform(ft, 12.0));
    CHECK(std::abs(grid_l2 - pl) < 1e-9 * grid_l2);

    Group gs = Group::so3();
    auto sgrid = grid_so3(5, 2.0);
    auto fs = random_bandlimited(gs, sgrid, 77, sgrid->exactness_band);
    grid_l2 = 0;
    for (std::size_t i = 0; i < sgrid->size(); ++i)
      grid_l2 += sgrid->weights[i] * std::norm(fs.values(i));
    grid_l2 = std::sqrt(grid_l2);
    pl = plancherel_norm(forward_transform(fs, sgrid->exactness_band));
    CHECK(std::abs(grid_l2 - pl) < 1e-9 * grid_l2);
  }
}

TEST_CASE("plancherel_norm is homogeneous") {
  auto c = random_coefficients(Group::so3(), 3, 5.0);
  double base = plancherel_norm(c);
  for (auto& b : c.blocks) b *= 2.0;
  CHECK(plancherel_norm(c) == doctest::Approx(2.0 * base).epsilon(1e-12));
}

TEST_CASE("explicit truncation") {
  auto c = zero_coefficients(Group::torus(1), 4.0);
  c.find({Backend::Torus, {1}})->operator()(0, 0) = 1e-15;
  c.find({Backend::Torus, {2}})->operator()(0, 0) = 1.0;
  // forward/inverse keep tiny coefficients; truncation is explicit
  truncate(c, 1e-14);
  CHECK(std::abs(c.find({Backend::Torus, {1}})->operator()(0, 0)) == 0.0);
  CHECK(std::abs(c.find({Backend::Torus, {2}})->operator()(0, 0)) == 1.0);
}
