#include "kdim/metric_entropy.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace kdim::metric {

void FiniteMetricSpace::validate(std::size_t max_checks) const {
  if (n == 0) throw std::invalid_argument("empty metric space");
  if (!dist) throw std::invalid_argument("metric space: missing distance oracle");
  std::uint64_t state = 0x9e3779b97f4a7c15ull + n;
  auto next = [&state]() {
    state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
  };
  for (std::size_t c = 0; c < max_checks; ++c) {
    const std::size_t i = next() % n, j = next() % n, k = next() % n;
    const double dii = dist(i, i);
    if (std::abs(dii) > kEpsTol) throw std::invalid_argument("metric: d(x,x) != 0");
    const double dij = dist(i, j), dji = dist(j, i);
    if (dij < -kEpsTol) throw std::invalid_argument("metric: negative distance");
    if (std::abs(dij - dji) > kEpsTol) throw std::invalid_argument("metric: asymmetric");
    if (dist(i, k) > dij + dist(j, k) + 1e-9)
      throw std::invalid_argument("metric: triangle inequality violated");
  }
  // duplicate guard on adjacent indices only (cheap, deterministic)
  for (std::size_t i = 0; i + 1 < n && i < max_checks; ++i)
    if (dist(i, i + 1) <= 0.0 && n > 1)
      throw std::invalid_argument("metric: duplicate points at distance 0");
}

FiniteMetricSpace space_from_cloud(const PointCloud& cloud, std::string label) {
  FiniteMetricSpace s;
  s.n = cloud.size();
  auto pts = std::make_shared<std::vector<std::vector<Complex>>>(cloud.points);
  s.dist = [pts](std::size_t i, std::size_t j) {
    return PointCloud::sup_dist((*pts)[i], (*pts)[j]);
  };
  s.label = std::move(label);
  return s;
}

FiniteMetricSpace space_from_reals(std::vector<double> xs, std::string label) {
  FiniteMetricSpace s;
  s.n = xs.size();
  auto v = std::make_shared<std::vector<double>>(std::move(xs));
  s.dist = [v](std::size_t i, std::size_t j) { return std::abs((*v)[i] - (*v)[j]); };
  s.label = std::move(label);
  return s;
}

FiniteMetricSpace space_from_vectors(std::vector<std::vector<double>> xs, std::string label) {
  FiniteMetricSpace s;
  s.n = xs.size();
  auto v = std::make_shared<std::vector<std::vector<double>>>(std::move(xs));
  s.dist = [v](std::size_t i, std::size_t j) {
    double d = 0.0;
    for (std::size_t t = 0; t < (*v)[i].size(); ++t)
      d = std::max(d, std::abs((*v)[i][t] - (*v)[j][t]));
    return d;
  };
  s.label = std::move(label);
  return s;
}

const char* method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::greedy: return "greedy";
    case BoundMethod::grid: return "grid";
    case BoundMethod::product: return "product";
    case BoundMethod::union_rule: return "union";
  }
  return "?";
}

std::vector<std::size_t> greedy_pack(const FiniteMetricSpace& s, double eps) {
  if (s.n == 0) throw std::invalid_argument("empty metric space");
  if (!(eps > 0.0)) throw std::invalid_argument("greedy_pack: eps must be positive");
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < s.n; ++i) {
    bool far = true;
    for (std::size_t p : picked)
      if (!(s.dist(i, p) > eps + kEpsTol)) { far = false; break; }
    if (far) picked.push_back(i);
  }
  return picked;
}

namespace {
// Cells grown by mutual diameter: x joins the cell only if it stays within
// 2 eps of every member. Cell diameter <= 2 eps by construction.
std::vector<std::size_t> diameter_cells(const FiniteMetricSpace& s, double eps) {
  std::vector<bool> covered(s.n, false);
  std::vector<std::size_t> seeds;
  std::vector<std::size_t> cell;
  for (std::size_t seed = 0; seed < s.n; ++seed) {
    if (covered[seed]) continue;
    seeds.push_back(seed);
    cell.assign(1, seed);
    covered[seed] = true;
    for (std::size_t x = seed + 1; x < s.n; ++x) {
      if (covered[x]) continue;
      bool fits = true;
      for (std::size_t y : cell)
        if (s.dist(x, y) > 2.0 * eps + kEpsTol) { fits = false; break; }
      if (fits) { cell.push_back(x); covered[x] = true; }
    }
  }
  return seeds;
}
}  // namespace

std::vector<std::size_t> greedy_cover(const FiniteMetricSpace& s, double eps) {
  if (s.n == 0) throw std::invalid_argument("empty metric space");
  if (!(eps > 0.0)) throw std::invalid_argument("greedy_cover: eps must be positive");
  auto cells = diameter_cells(s, eps);
  auto balls = greedy_pack(s, eps);  // maximal packing doubles as a radius-eps ball cover
  return cells.size() <= balls.size() ? cells : balls;
}

bool sandwich_check(const FiniteMetricSpace& s, double eps) {
  const auto pack2 = greedy_pack(s, 2.0 * eps).size();
  const auto cover = greedy_cover(s, eps).size();
  const auto pack1 = greedy_pack(s, eps).size();
  return pack2 <= cover && cover <= pack1;
}

EntropyReport entropy_report(const FiniteMetricSpace& s, double eps) {
  EntropyReport r;
  r.eps = eps;
  r.cover_count = greedy_cover(s, eps).size();
  r.pack_count = greedy_pack(s, eps).size();
  r.h_upper = std::log(static_cast<double>(r.cover_count));
  r.h_lower = std::log(static_cast<double>(greedy_pack(s, 2.0 * eps).size()));
  r.method = BoundMethod::greedy;
  return r;
}

namespace {
unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > std::numeric_limits<unsigned long long>::max() / a)
    return std::numeric_limits<unsigned long long>::max();
  return a * b;
}
void require_same_eps(const std::vector<EntropyReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("no reports");
  for (const auto& r : reports)
    if (std::abs(r.eps - reports.front().eps) > kEpsTol)
      throw std::invalid_argument("reports disagree on eps");
}
}  // namespace

EntropyReport product_entropy_bound(const std::vector<EntropyReport>& reports) {
  require_same_eps(reports);
  EntropyReport out;
  out.eps = reports.front().eps;
  out.method = BoundMethod::product;
  out.cover_count = 1;
  out.pack_count = 1;
  for (const auto& r : reports) {
    out.h_upper += r.h_upper;
    out.h_lower += r.h_lower;
    out.cover_count = sat_mul(out.cover_count, r.cover_count);
    out.pack_count = sat_mul(out.pack_count, r.pack_count);
  }
  return out;
}

double linf_ball_entropy_bound(std::uint32_t n, double r, double eps) {
  if (n == 0 || !(r > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("linf_ball_entropy_bound: bad arguments");
  return n * std::log(r / eps + 1.0);
}

EntropyReport union_entropy_bound(const std::vector<EntropyReport>& reports) {
  require_same_eps(reports);
  EntropyReport out;
  out.eps = reports.front().eps;
  out.method = BoundMethod::union_rule;
  out.cover_count = 1;
  out.pack_count = 1;
  out.h_lower = 0.0;
  for (const auto& r : reports) {
    out.h_upper += r.h_upper;
    out.cover_count = sat_mul(out.cover_count, r.cover_count);
    if (r.h_lower > out.h_lower) { out.h_lower = r.h_lower; out.pack_count = r.pack_count; }
  }
  return out;
}

std::size_t exact_min_cover(const FiniteMetricSpace& s, double eps) {
  if (s.n > 20) throw std::invalid_argument("exact_min_cover: space too large");
  const std::uint32_t n = static_cast<std::uint32_t>(s.n);
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  // adjacency under "within 2 eps"
  std::vector<std::uint32_t> ok(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (s.dist(i, j) <= 2.0 * eps + kEpsTol) ok[i] |= (1u << j);
  std::vector<std::uint32_t> dp(full + 1u, 0xffffffffu);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t v = mask & (~mask + 1u);  // lowest bit
    const std::uint32_t vi = static_cast<std::uint32_t>(__builtin_ctz(mask));
    std::uint32_t cand = mask & ok[vi];
    // enumerate subsets of cand containing v that form diameter <= 2eps cells
    for (std::uint32_t sub = cand; sub; sub = (sub - 1) & cand) {
      if (!(sub & v)) continue;
      bool clique = true;
      for (std::uint32_t t = sub; t && clique; t &= t - 1) {
        const std::uint32_t i = static_cast<std::uint32_t>(__builtin_ctz(t));
        if ((sub & ~ok[i]) != 0) clique = false;
      }
      if (clique && dp[mask & ~sub] + 1 < dp[mask]) dp[mask] = dp[mask & ~sub] + 1;
    }
  }
  return dp[full];
}

std::size_t exact_max_pack(const FiniteMetricSpace& s, double eps) {
  if (s.n > 24) throw std::invalid_argument("exact_max_pack: space too large");
  const std::uint32_t n = static_cast<std::uint32_t>(s.n);
  std::vector<std::uint32_t> far(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (s.dist(i, j) > eps + kEpsTol) far[i] |= (1u << j);
  std::size_t best = 0;
  // branch and bound over candidates in index order
  std::function<void(std::uint32_t, std::uint32_t, std::size_t)> rec =
      [&](std::uint32_t cand, std::uint32_t lowest, std::size_t depth) {
        best = std::max(best, depth);
        for (std::uint32_t i = lowest; i < n; ++i) {
          if (!(cand & (1u << i))) continue;
          if (depth + (n - i) <= best) break;
          rec(cand & far[i], i + 1, depth + 1);
        }
      };
  rec((n == 32) ? 0xffffffffu : ((1u << n) - 1u), 0, 0);
  return best;
}

}  // namespace kdim::metric
