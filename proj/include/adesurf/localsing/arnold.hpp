#pragma once

#include <string>
#include <vector>

namespace adesurf::localsing {

/// Arnold normal form in x, y, z with its expected classification.
struct ArnoldCase {
    std::string poly;
    std::string type;
    int corank;
    std::size_t mu;
};

/// A1..A6, D4..D7, E6, E7, E8.
inline std::vector<ArnoldCase> arnold_normal_forms() {
    std::vector<ArnoldCase> v;
    for (int k = 1; k <= 6; ++k)
        v.push_back({"x^" + std::to_string(k + 1) + " + y^2 + z^2", "A" + std::to_string(k), k == 1 ? 0 : 1,
                     static_cast<std::size_t>(k)});
    for (int k = 4; k <= 7; ++k)
        v.push_back({"x^2*y + y^" + std::to_string(k - 1) + " + z^2", "D" + std::to_string(k), 2,
                     static_cast<std::size_t>(k)});
    v.push_back({"x^3 + y^4 + z^2", "E6", 2, 6});
    v.push_back({"x^3 + x*y^3 + z^2", "E7", 2, 7});
    v.push_back({"x^3 + y^5 + z^2", "E8", 2, 8});
    return v;
}

}  // namespace adesurf::localsing
