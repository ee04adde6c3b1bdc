#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace cdsfl {

// Stage seeds are derived from the master seed by a labeled hash so that
// changing one stage label never perturbs the draws of another stage.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

// Deterministic generator. The transforms (uniform, exponential, normal,
// gamma, dirichlet) are implemented here rather than with <random>'s
// distribution objects, whose output is implementation-defined; mt19937_64
// itself is bit-exact everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  double uniform01();                      // [0, 1)
  double uniform(double lo, double hi);
  std::uint64_t below(std::uint64_t n);    // [0, n), rejection-sampled
  double exponential(double mean);
  double normal(double mu, double sigma);
  double gamma(double shape);              // unit scale
  std::vector<double> dirichlet(double alpha, std::size_t dim);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cdsfl
