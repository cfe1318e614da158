#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "involab/series.hpp"

namespace involab {

// x^a y^b
struct Monomial {
  int a = 0;
  int b = 0;
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

// Values of x_1, x_2, ...; every later variable is 1.
struct Specialization {
  std::vector<Monomial> weights;
};

enum class CfFamily { CS, CI, DS, DI };
CfFamily parse_cf_family(std::string_view name);

// Truncated to x^0..x^nx, y^0..y^ny.  x_1 must have positive degree.
BivariateSeries cf_catalog(CfFamily family, const Specialization& spec, int nx, int ny);

// Sum over 132-avoiding involutions of x^length y^(right-to-left maxima).
BivariateSeries rtl_gf(int order);

}  // namespace involab
