#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gft/classes.hpp>
#include <gft/constants.hpp>
#include <gft/series.hpp>

namespace gft::testing {

inline constexpr double kK = kPhiR;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex(double radius = 1.0) {
    return std::polar(radius * std::sqrt(uniform()), uniform(0.0, kTwoPi));
  }

  // Series with a_0 = 0 and |a_1| in [0.5, 1.5].
  Series invertible_series(int order) {
    Series s(order);
    s[1] = std::polar(uniform(0.5, 1.5), uniform(0.0, kTwoPi));
    for (int n = 2; n <= order; ++n) s[n] = complex(1.0);
    return s;
  }

  Series zero_constant_series(int order) {
    Series s(order);
    for (int n = 1; n <= order; ++n) s[n] = complex(1.0);
    return s;
  }

  HerglotzAtoms atoms(int count) {
    std::vector<HerglotzAtom> a;
    double total = 0.0;
    for (int j = 0; j < count; ++j) {
      a.push_back({uniform(0.05, 1.0), uniform(0.0, kTwoPi)});
      total += a.back().weight;
    }
    for (auto& x : a) x.weight /= total;
    return HerglotzAtoms(std::move(a));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gft::testing
