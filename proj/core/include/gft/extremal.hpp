#pragma once

// Extremal functions named in the coefficient and radius theorems.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/series.hpp"

namespace gft {

struct ExtremalFunction {
  std::string id;
  std::optional<double> param;
  // f from generate_function (or the closed form for cs_pair).
  Series series{kDefaultOrder};
  // f from its closed-form expression, when it has one.
  std::optional<Series> closed_series;
  // a_1, a_2, ... as printed for the function in the literature; empty if none.
  std::vector<Complex> golden;
  // zf'/f in closed form.
  std::function<Complex(Complex)> zfp_over_f;
  std::string description;
};

// Ids: f0, f1, f2, f3, h, f_q, f_B, f_C, f_L, cs_pair. f_B and cs_pair take
// alpha (f_B: 0 <= alpha <= 1, cs_pair: 0 <= alpha < 1).
ExtremalFunction extremal_catalog(std::string_view id, std::optional<double> param = std::nullopt,
                                  int order = kDefaultOrder);

std::vector<std::string> extremal_ids();

}  // namespace gft
