#include "staymap/generators.hpp"

#include <random>
#include <stdexcept>

namespace staymap {

void GridConstructionParams::validate() const {
  if (m < 1) throw std::invalid_argument("grid construction needs m >= 1");
  if (!(side > 0) || !(gap > 0)) throw std::invalid_argument("side and gap must be positive");
  if (speed_factor < 1) throw std::invalid_argument("speed factor must be at least 1");
}

namespace {

struct Waypoint {
  Rational t;
  Rational x;
  Rational y;
};

// One strip-cutting phase starting at the origin at time t0. Returns the
// phase's waypoints, the first one being (0, 0) at t0.
std::vector<Waypoint> strip_phase(const GridConstructionParams& p, const Rational& t0) {
  const Rational& s = p.side;
  const Rational& g = p.gap;
  const Rational m(p.m);
  const Rational u = s / m;
  const Rational h = g / m;
  const Rational quick = h / p.speed_factor;
  const Rational far = 3 * s;  // well outside the band y in [-s, s]

  std::vector<Waypoint> w;
  w.push_back({t0, 0, 0});

  // Out to (2s, 0) and back to the origin at g - h/2. With m == 1 both would
  // land at g/2, so the outward leg is shortened to leave time for the return.
  const Rational out_at = t0 + (p.m > 1 ? g / 2 : g / 4);
  const Rational back_at = t0 + g - h / 2;
  const Rational leg = back_at - out_at;
  w.push_back({out_at, 2 * s, 0});
  w.push_back({out_at + leg / 4, 2 * s, -far});
  w.push_back({out_at + 3 * leg / 4, 0, -far});
  w.push_back({back_at, 0, 0});

  // Staircase: wait, then move u to the right in `quick` time, m times.
  for (int k = 1; k <= p.m; ++k) {
    const Rational beat = back_at + Rational(k) * h;
    w.push_back({beat - quick, Rational(k - 1) * u, 0});
    w.push_back({beat, Rational(k) * u, 0});
  }

  // Hidden detour to (-s, 0), then a slow sweep back to the origin and a dwell.
  const Rational detour_at = back_at + g;
  const Rational sweep_at = detour_at + h / 2;
  w.push_back({detour_at + h / 8, s, -far});
  w.push_back({detour_at + 3 * h / 8, -s, -far});
  w.push_back({sweep_at, -s, 0});
  w.push_back({sweep_at + g, 0, 0});
  w.push_back({sweep_at + 2 * g, 0, 0});
  return w;
}

}  // namespace

Trajectory<Rational> grid_construction(const GridConstructionParams& params) {
  params.validate();
  auto first = strip_phase(params, Rational(0));
  auto second = strip_phase(params, first.back().t);

  std::vector<Vertex<Rational>> vs;
  vs.reserve(first.size() + second.size());
  for (const auto& w : first) vs.push_back({w.t, {w.x, w.y}});
  // Rotate the second phase by 90 degrees: (x, y) -> (-y, x).
  for (std::size_t i = 1; i < second.size(); ++i) {
    const auto& w = second[i];
    vs.push_back({w.t, {-w.y, w.x}});
  }
  return Trajectory<Rational>(std::move(vs), 2);
}

Trajectory<double> random_walk(std::size_t n, int dim, std::uint64_t seed, double step_scale,
                               double dt_scale) {
  if (n < 1) throw std::invalid_argument("random walk needs at least one vertex");
  if (dim != 1 && dim != 2) throw std::invalid_argument("random walk dimension must be 1 or 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dt_ticks(1, 1024);
  // 724 / 1024 * sqrt(2) < 1 keeps 2D steps within step_scale.
  const int reach = dim == 1 ? 1024 : 724;
  std::uniform_int_distribution<int> step_ticks(-reach, reach);

  std::vector<Vertex<double>> vs;
  vs.reserve(n);
  Vertex<double> cur{0.0, {0.0, 0.0}};
  vs.push_back(cur);
  for (std::size_t i = 1; i < n; ++i) {
    cur.t += dt_scale * dt_ticks(rng) / 1024.0;
    cur.pos.x += step_scale * step_ticks(rng) / 1024.0;
    if (dim == 2) cur.pos.y += step_scale * step_ticks(rng) / 1024.0;
    vs.push_back(cur);
  }
  return Trajectory<double>(std::move(vs), dim);
}

Trajectory<double> concatenated_walk(std::size_t n, std::size_t block, std::uint64_t seed) {
  if (n < 1 || block < 1) throw std::invalid_argument("concatenated walk needs n, block >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dt_ticks(1, 1024);
  std::uniform_int_distribution<int> step_ticks(-1024, 1024);

  std::vector<Vertex<double>> vs;
  vs.reserve(n);
  Vertex<double> cur{0.0, {0.0, 0.0}};
  vs.push_back(cur);
  for (std::size_t i = 1; i < n; ++i) {
    cur.t += dt_ticks(rng) / 1024.0;
    cur.pos.x = (i % block == 0) ? 0.0 : cur.pos.x + step_ticks(rng) / 1024.0;
    vs.push_back(cur);
  }
  return Trajectory<double>(std::move(vs), 1);
}

}  // namespace staymap
