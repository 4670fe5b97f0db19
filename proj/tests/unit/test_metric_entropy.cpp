#include <doctest.h>

#include <cmath>

#include "kdim/metric_entropy.hpp"
#include "kdim/rng.hpp"

using namespace kdim;
using namespace kdim::metric;

namespace {
FiniteMetricSpace integers_0_to_9() {
  std::vector<double> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(i);
  return space_from_reals(xs, "0..9");
}

FiniteMetricSpace random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed,
                               double scale = 1.0) {
  Rng rng(seed);
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> p(dim);
    for (auto& c : p) c = rng.uniform(-scale, scale);
    pts.push_back(std::move(p));
  }
  return space_from_vectors(std::move(pts), "random");
}
}  // namespace

TEST_CASE("greedy cover on a singleton") {
  auto s = space_from_reals({0.7}, "pt");
  CHECK(greedy_cover(s, 0.1).size() == 1);
  CHECK(entropy_report(s, 0.1).h_upper == doctest::Approx(0.0));
}

TEST_CASE("greedy cover 0..9 at eps = 1/2 matches the exhaustive minimum") {
  auto s = integers_0_to_9();
  // oracle: exhaustive minimal cover by diameter <= 2 eps cells
  const std::size_t exact = exact_min_cover(s, 0.5);
  CHECK(exact == 5);  // pairs {2j, 2j+1} of diameter 1 = 2 eps
  CHECK(greedy_cover(s, 0.5).size() == 5);
}

TEST_CASE("greedy pack 0..9") {
  auto s = integers_0_to_9();
  auto p1 = greedy_pack(s, 1.0);
  REQUIRE(p1.size() == 5);  // 0,2,4,6,8; exhaustive oracle agrees
  CHECK(exact_max_pack(s, 1.0) == 5);
  CHECK(p1[0] == 0);
  CHECK(p1[1] == 2);
  CHECK(greedy_pack(s, 0.5).size() == 10);  // all gaps exceed eps
  auto single = space_from_reals({3.0}, "pt");
  CHECK(greedy_pack(single, 2.0).size() == 1);
}

TEST_CASE("sandwich chain on 0..9 and random clouds") {
  auto s = integers_0_to_9();
  CHECK(greedy_pack(s, 1.0).size() == 5);
  CHECK(greedy_cover(s, 0.5).size() == 5);
  CHECK(sandwich_check(s, 0.5));
  auto single = space_from_reals({1.0}, "pt");
  CHECK(sandwich_check(single, 0.3));
  // 50-point cloud in R^3 under the sup metric
  auto r = random_cloud(50, 3, 42);
  CHECK(sandwich_check(r, 0.2));
}

TEST_CASE("sandwich property over many random spaces") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = random_cloud(5 + seed % 60, 1 + seed % 3, 1000 + seed);
    for (double eps : {0.05, 0.17, 0.5, 1.3}) {
      CAPTURE(seed);
      CAPTURE(eps);
      CHECK(sandwich_check(s, eps));
    }
  }
}

TEST_CASE("greedy bounds vs exhaustive oracle on tiny spaces") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto s = random_cloud(4 + seed % 9, 1 + seed % 2, 7000 + seed);
    for (double eps : {0.1, 0.35, 0.8}) {
      const auto cover = greedy_cover(s, eps).size();
      const auto pack = greedy_pack(s, eps).size();
      const auto n_exact = exact_min_cover(s, eps);
      const auto m_exact = exact_max_pack(s, eps);
      CAPTURE(seed);
      CAPTURE(eps);
      CHECK(cover >= n_exact);       // upper bound on N_eps
      CHECK(pack <= m_exact);        // lower bound on M_eps
      CHECK(n_exact <= m_exact);     // the lemma itself
      CHECK(cover <= s.n);
    }
  }
}

TEST_CASE("cover collapses to one cell when diameter <= 2 eps") {
  auto s = random_cloud(20, 2, 5, 0.4);  // diameter <= 1.6
  CHECK(greedy_cover(s, 0.8).size() == 1);
}

TEST_CASE("product bound") {
  EntropyReport a;
  a.eps = 0.1;
  a.cover_count = 3;
  a.h_upper = std::log(3.0);
  a.h_lower = std::log(2.0);
  a.pack_count = 2;
  SUBCASE("single factor unchanged") {
    auto r = product_entropy_bound({a});
    CHECK(r.h_upper == doctest::Approx(std::log(3.0)));
    CHECK(r.method == BoundMethod::product);
  }
  SUBCASE("two copies of H = log 3 bound by log 9") {
    auto r = product_entropy_bound({a, a});
    CHECK(r.h_upper == doctest::Approx(std::log(9.0)));
  }
  SUBCASE("log additivity") {
    EntropyReport b = a;
    b.cover_count = 5;
    b.h_upper = std::log(5.0);
    EntropyReport c = a;
    c.cover_count = 2;
    c.h_upper = std::log(2.0);
    auto r = product_entropy_bound({c, b});
    CHECK(r.h_upper == doctest::Approx(std::log(10.0)));
  }
  SUBCASE("eps mismatch rejected") {
    EntropyReport b = a;
    b.eps = 0.2;
    CHECK_THROWS(product_entropy_bound({a, b}));
  }
}

TEST_CASE("linf ball bound vs explicit grid covers") {
  // n=1, r=1, eps=0.1: ten intervals of length 0.2 cover [-1,1]
  const double bound = linf_ball_entropy_bound(1, 1.0, 0.1);
  CHECK(bound == doctest::Approx(std::log(11.0)));
  CHECK(std::log(10.0) < bound);
  // n=2, r=1, eps=1/3: 3x3 grid of cells with half-width 1/3
  const double b2 = linf_ball_entropy_bound(2, 1.0, 1.0 / 3.0);
  CHECK(b2 == doctest::Approx(2.0 * std::log(4.0)));
  CHECK(std::log(9.0) <= b2);
  // eps >= r with n=1: a single interval suffices and the bound stays >= 0
  CHECK(linf_ball_entropy_bound(1, 0.5, 0.5) == doctest::Approx(std::log(2.0)));
  // generic grid-count comparison: ceil(r/eps) cells per axis always fit
  for (double r : {0.5, 1.0, 2.0})
    for (double eps : {0.3, 0.11, 0.05})
      for (std::uint32_t n : {1u, 2u, 3u}) {
        const double grid_h = n * std::log(std::ceil(r / eps));
        CHECK(grid_h <= linf_ball_entropy_bound(n, r, eps) + 1e-12);
      }
}

TEST_CASE("union bound") {
  EntropyReport a;
  a.eps = 0.1;
  a.cover_count = 5;
  a.h_upper = std::log(5.0);
  a.h_lower = std::log(2.0);
  a.pack_count = 2;
  SUBCASE("one part is the identity") {
    auto r = union_entropy_bound({a});
    CHECK(r.h_upper == doctest::Approx(a.h_upper));
    CHECK(r.h_lower == doctest::Approx(a.h_lower));
  }
  SUBCASE("two parts of H = log 5 give upper log 25") {
    auto r = union_entropy_bound({a, a});
    CHECK(r.h_upper == doctest::Approx(std::log(25.0)));
  }
  SUBCASE("upper adds, lower takes the max") {
    EntropyReport b = a;
    b.cover_count = 2;
    b.h_upper = std::log(2.0);
    b.h_lower = std::log(3.0);
    b.pack_count = 3;
    EntropyReport c = a;
    c.cover_count = 3;
    c.h_upper = std::log(3.0);
    c.h_lower = 0.0;
    c.pack_count = 1;
    auto r = union_entropy_bound({b, c});
    CHECK(r.h_upper == doctest::Approx(std::log(6.0)));
    CHECK(r.h_lower == doctest::Approx(std::log(3.0)));
  }
}

TEST_CASE("metric validation catches broken oracles") {
  FiniteMetricSpace bad;
  bad.n = 3;
  bad.dist = [](std::size_t i, std::size_t j) { return i == j ? 0.0 : (i + j) * 0.1; };
  CHECK_NOTHROW(bad.validate());
  bad.dist = [](std::size_t i, std::size_t j) { return static_cast<double>(i) - j; };
  CHECK_THROWS(bad.validate());  // asymmetric / negative
  CHECK_THROWS(greedy_cover(FiniteMetricSpace{}, 0.1));
}

TEST_CASE("reports keep h_lower <= h_upper") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto s = random_cloud(30, 2, 99 + seed);
    for (double eps : {0.05, 0.2, 0.6}) {
      auto r = entropy_report(s, eps);
      CHECK(r.h_lower <= r.h_upper + 1e-12);
      CHECK(r.eps == eps);
    }
  }
}
