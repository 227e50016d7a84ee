#include "adesurf/mpoly/mpoly.hpp"

namespace adesurf {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > kMaxVars)
        throw Error("a ring needs between 1 and " + std::to_string(kMaxVars) + " variables");
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

RingRef make_ring(std::vector<std::string> names) { return std::make_shared<const PolyRing>(std::move(names)); }

RingRef projective_ring() {
    static const RingRef r = make_ring({"x1", "x2", "x3", "x4"});
    return r;
}

RingRef chart_ring(std::size_t projective_nvars) {
    if (projective_nvars == 4) {
        static const RingRef r = make_ring({"x", "y", "z"});
        return r;
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i < projective_nvars; ++i) names.push_back("y" + std::to_string(i));
    return make_ring(std::move(names));
}

}  // namespace adesurf
