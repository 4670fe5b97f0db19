#include <doctest.h>

#include <cmath>

#include "kdim/trace_space.hpp"

using namespace kdim;
using namespace kdim::trace;

namespace {
PointCloud disk_fixture(double r = 0.25, double R = 1.0) {
  return disk_sample(r, R, 4, 16);
}
}  // namespace

TEST_CASE("build_surrogate picks the smallest valid cutoff") {
  auto X = disk_fixture();
  const double eps = 1e-3;
  auto m = build_surrogate(X, eps);
  // oracle: scan k directly against the tail bound
  std::uint32_t k_expected = 0;
  while (poly::taylor_truncation_bound(1.0, 0.25, k_expected, 1.0) > eps / 3.0) ++k_expected;
  CHECK(m.k == k_expected);
  CHECK(m.k == 6);  // (4/3) 4^-6 = 3.26e-4 <= 1e-3/3; k=5 gives 1.30e-3 > eps/3
  CHECK(poly::taylor_truncation_bound(1.0, 0.25, m.k, 1.0) <= eps / 3.0);
  if (m.k > 0)
    CHECK(poly::taylor_truncation_bound(1.0, 0.25, m.k - 1, 1.0) > eps / 3.0);
  CHECK(m.term_count == m.k + 1);
  // k <= ceil(L log(1/eps)) + O(1) with the recorded L
  CHECK(m.k <= std::ceil(m.L * std::log(1.0 / eps)) + 2);
}

TEST_CASE("halving eps grows k by at most the geometric step") {
  auto X = disk_fixture();
  const double step = std::ceil(std::log(2.0) / std::log(1.0 / 0.25));
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    auto a = build_surrogate(X, eps);
    auto b = build_surrogate(X, eps / 2.0);
    CHECK(b.k >= a.k);
    CHECK(b.k - a.k <= static_cast<std::uint32_t>(step) + 1);
  }
}

TEST_CASE("entropy_upper on a singleton tracks the value-disk bound") {
  auto X = singleton_cloud({Complex(0.2, 0.1)}, 1.0);
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    auto r = entropy_upper(X, eps);
    // the value disk is a 2-real-dimensional unit ball; compare with the
    // linf-ball bound at the matching net radius 2eps/3
    const double ball = metric::linf_ball_entropy_bound(2, 1.0, 2.0 * eps / 3.0);
    CHECK(r.h_upper > 0.0);
    CHECK(r.h_upper <= ball + 3.0);  // square-grid rounding costs at most e^3/cell
    CHECK(r.h_upper >= 2.0 * std::log(1.0 / eps) * 0.8);
  }
}

TEST_CASE("entropy_upper is zero once eps reaches the trace diameter") {
  auto X = disk_fixture();
  CHECK(entropy_upper(X, 1.0).h_upper == 0.0);
  CHECK(entropy_upper(X, 2.5).h_upper == 0.0);
  CHECK(entropy_upper(X, 0.9).h_upper > 0.0);
}

TEST_CASE("entropy_upper grows roughly like log^2(1/eps) for the disk") {
  auto X = disk_fixture();
  const double h1 = entropy_upper(X, 1e-3).h_upper;
  const double h2 = entropy_upper(X, 1e-6).h_upper;
  CHECK(h1 > 0);
  // doubling log(1/eps) should grow h by a factor between 2 and 4.5
  CHECK(h2 / h1 > 2.0);
  CHECK(h2 / h1 < 4.5);
}

TEST_CASE("entropy_lower: singleton packing of the value disk") {
  auto X = singleton_cloud({Complex(0, 0)}, 1.0);
  // oracle: an explicit hex-style packing of the unit disk at eps = 0.5
  // (center plus two rings) has at least 9 points, so M_eps >= 9
  {
    std::vector<Complex> pts{Complex(0, 0)};
    for (int i = 0; i < 6; ++i) {
      const double th = 2 * 3.14159265358979 * i / 6.0;
      pts.push_back(Complex(0.58 * std::cos(th), 0.58 * std::sin(th)));
    }
    for (int i = 0; i < 6; ++i) {
      const double th = 2 * 3.14159265358979 * (i + 0.5) / 6.0;
      pts.push_back(Complex(0.99 * std::cos(th), 0.99 * std::sin(th)));
    }
    std::size_t ok = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (std::abs(pts[i] - pts[j]) > 0.5) ++ok;
    CHECK(ok == pts.size() * (pts.size() - 1) / 2);  // pairwise > eps: 13 points
  }
  auto r = entropy_lower(X, 0.5, 4000, 11);
  CHECK(r.pack_count >= 9);
  CHECK(r.h_lower >= std::log(9.0));
}

TEST_CASE("entropy_lower is deterministic in the seed") {
  auto X = disk_fixture();
  auto a = entropy_lower(X, 0.25, 300, 5);
  auto b = entropy_lower(X, 0.25, 300, 5);
  CHECK(a.pack_count == b.pack_count);
  CHECK(a.h_lower == b.h_lower);
}

TEST_CASE("more coordinates can only separate traces further") {
  auto single = singleton_cloud({Complex(0, 0)}, 1.0);
  std::vector<std::vector<Complex>> two{{Complex(-0.2, 0)}, {Complex(0.2, 0)}};
  auto pair_cloud = make_cloud_centered(std::move(two), {Complex(0, 0)}, 1.0);
  for (double eps : {0.5, 0.25}) {
    auto a = entropy_lower(single, eps, 800, 3);
    auto b = entropy_lower(pair_cloud, eps, 800, 3);
    CHECK(b.h_lower >= a.h_lower - 1e-12);
  }
}

TEST_CASE("sandwich consistency between the two bounds") {
  auto X = disk_fixture();
  for (double eps : {0.5, 0.1, 0.02}) {
    auto lo = entropy_lower(X, eps, 400, 9);
    auto hi = entropy_upper(X, eps);
    CHECK(lo.h_lower <= hi.h_upper + 1e-9);
  }
}

TEST_CASE("entropy_upper union sub-additivity") {
  auto X1 = disk_fixture(0.25, 1.0);
  std::vector<std::vector<Complex>> shifted;
  for (const auto& p : X1.points) shifted.push_back({p[0] + Complex(0.3, 0.0)});
  auto X2 = make_cloud_centered(std::move(shifted), {Complex(0.3, 0)}, 1.0);
  std::vector<std::vector<Complex>> both = X1.points;
  for (const auto& p : X2.points) both.push_back(p);
  auto U = make_cloud(both, 1.0);
  for (double eps : {1e-2, 1e-3}) {
    const double hu = entropy_upper(U, eps).h_upper;
    const double h1 = entropy_upper(X1, eps).h_upper;
    const double h2 = entropy_upper(X2, eps).h_upper;
    CHECK(hu <= h1 + h2 + 1e-9);
  }
}

TEST_CASE("subset monotonicity of the upper bound") {
  auto X = disk_fixture();
  std::vector<std::vector<Complex>> half;
  for (std::size_t i = 0; i < X.points.size(); i += 2) half.push_back(X.points[i]);
  auto Y = make_cloud_centered(std::move(half), {Complex(0, 0)}, 1.0);
  for (double eps : {1e-2, 1e-3}) {
    CHECK(entropy_upper(Y, eps).h_upper <= entropy_upper(X, eps).h_upper + 1e-9);
  }
}

TEST_CASE("apply_poly_map") {
  auto X = disk_fixture(0.5, 2.0);
  SUBCASE("identity returns the same points") {
    poly::Poly id(1);
    id.set(MultiIndex{1}, Complex(1, 0));
    auto Y = apply_poly_map(X, {id});
    REQUIRE(Y.size() == X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
      CHECK(PointCloud::sup_dist(Y.points[i], X.points[i]) < 1e-14);
  }
  SUBCASE("graph map z -> (z, z^2) encloses with radius max(r, r^2)") {
    poly::Poly id(1), sq(1);
    id.set(MultiIndex{1}, Complex(1, 0));
    sq.set(MultiIndex{2}, Complex(1, 0));
    auto Y = apply_poly_map(X, {id, sq});
    CHECK(Y.ambient_dim == 2);
    // oracle: direct maxima over the image
    double r1 = 0, r2 = 0;
    for (const auto& p : Y.points) {
      r1 = std::max(r1, std::abs(p[0] - Y.enclosing.center[0]));
      r2 = std::max(r2, std::abs(p[1] - Y.enclosing.center[1]));
    }
    CHECK(Y.inner_radius == doctest::Approx(std::max(r1, r2)));
  }
  SUBCASE("projection drops to one dimension") {
    poly::Poly id2(2);
    id2.set(MultiIndex{1, 0}, Complex(1, 0));
    auto curve = apply_poly_map(X, {monomial(std::size_t(1), MultiIndex{1}, Complex(1, 0)),
                                    monomial(std::size_t(1), MultiIndex{2}, Complex(1, 0))});
    auto back = apply_poly_map(curve, {id2});
    CHECK(back.ambient_dim == 1);
    CHECK(back.size() == X.size());
  }
  SUBCASE("arity mismatch rejected") {
    poly::Poly wrong(2);
    wrong.set(MultiIndex{1, 0}, Complex(1, 0));
    CHECK_THROWS(apply_poly_map(X, {wrong}));
  }
}
