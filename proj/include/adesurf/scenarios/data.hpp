#pragma once

#include <string_view>
#include <vector>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/mpoly/mpoly.hpp"
#include "adesurf/refgroup/refgroup.hpp"

namespace adesurf::data {

// Raw file contents compiled in from data/.
std::string_view g_text();
std::string_view w_generators_text();
std::string_view seed_point_text();
std::string_view k8_text();
/// docs/anchors.json.
std::string_view anchors_text();

/// The degree-8 polynomial g in x1..x4.
QPoly g();
/// g(x1^k, .., x4^k), checked homogeneous of degree 8k.
QPoly g_power(unsigned k);
/// s1, s2, s3, s4.
std::vector<GroupMatrix> w_generators();
ProjectivePoint seed_point();
RatPoly k8_polynomial();

}  // namespace adesurf::data
