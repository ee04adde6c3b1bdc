#include "cdsfl/rng.hpp"

#include <cmath>

#include "cdsfl/error.hpp"

namespace cdsfl {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

static std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
  return splitmix64(base ^ fnv1a64(label));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(base ^ (a * 0x9e3779b97f4a7c15ull)) ^ (b * 0xc2b2ae3d27d4eb4full));
}

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(errc::invalid_argument, "Rng::below: n must be positive");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

double Rng::exponential(double mean) {
  double u;
  do {
    u = uniform01();
  } while (u >= 1.0);  // guard log(0)
  return -mean * std::log1p(-u);
}

double Rng::normal(double mu, double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return mu + sigma * spare_;
  }
  double u1;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return mu + sigma * r * std::cos(theta);
}

// Marsaglia-Tsang; the shape<1 case is boosted through shape+1.
double Rng::gamma(double shape) {
  if (shape <= 0.0) fail(errc::invalid_argument, "Rng::gamma: shape must be positive");
  if (shape < 1.0) {
    double u;
    do {
      u = uniform01();
    } while (u <= 0.0);
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal(0.0, 1.0);
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> Rng::dirichlet(double alpha, std::size_t dim) {
  if (alpha <= 0.0) fail(errc::invalid_argument, "dirichlet: alpha must be positive");
  if (dim == 0) fail(errc::invalid_argument, "dirichlet: dimension must be positive");
  std::vector<double> out(dim);
  for (;;) {
    double sum = 0.0;
    for (auto& v : out) {
      v = gamma(alpha);
      sum += v;
    }
    if (sum > 0.0) {
      for (auto& v : out) v /= sum;
      return out;
    }
    // all gammas underflowed (tiny alpha); redraw
  }
}

}  // namespace cdsfl
