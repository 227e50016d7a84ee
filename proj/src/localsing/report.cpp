#include "adesurf/localsing/localsing.hpp"

namespace adesurf {

std::string to_string(CubicRootType t) {
    switch (t) {
        case CubicRootType::ThreeDistinct: return "three-distinct";
        case CubicRootType::OneDouble: return "one-double";
        case CubicRootType::Triple: return "triple";
        case CubicRootType::Zero: return "zero";
    }
    return "?";
}

std::string SingularityReport::type_name() const {
    switch (type) {
        case SingularityType::A: return "A" + std::to_string(index);
        case SingularityType::D: return "D" + std::to_string(index);
        case SingularityType::E: return "E" + std::to_string(index);
        case SingularityType::NotSimple: return "NotSimple";
        case SingularityType::NotIsolated: return "NotIsolated";
    }
    return "?";
}

}  // namespace adesurf
