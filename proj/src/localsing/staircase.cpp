#include "adesurf/groebner/hilbert.hpp"
#include "adesurf/localsing/mora.hpp"

namespace adesurf {

namespace {

// Monomials of degree < bound outside the ideal, by depth-first enumeration.
std::size_t count_below(const std::vector<Monomial>& leading, std::size_t nvars, std::uint32_t bound) {
    std::size_t count = 0;
    Monomial m;
    auto outside = [&](const Monomial& x) {
        for (const auto& l : leading)
            if (l.divides(x)) return false;
        return true;
    };
    // Divisibility is monotone, so a pruned branch never hides a standard monomial.
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t deg) -> void {
        if (var == nvars) {
            ++count;
            return;
        }
        for (std::uint32_t e = 0; deg + e < bound; ++e) {
            m[var] = e;
            if (!outside(m)) break;
            self(self, var + 1, deg + e);
        }
        m[var] = 0;
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace

std::optional<std::size_t> staircase_size(const std::vector<Monomial>& leading, std::size_t nvars,
                                          std::optional<std::uint32_t> truncation) {
    if (truncation) return count_below(leading, nvars, *truncation);
    try {
        return standard_monomials(leading, nvars).size();
    } catch (const NotZeroDimensional&) {
        return std::nullopt;
    }
}

}  // namespace adesurf
