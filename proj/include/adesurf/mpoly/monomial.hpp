#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adesurf/errors.hpp"

namespace adesurf {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector; unused trailing slots stay zero so that monomials of
/// the same ring compare and hash consistently.
struct Monomial {
    std::array<std::uint32_t, kMaxVars> e{};

    std::uint32_t& operator[](std::size_t i) { return e[i]; }
    std::uint32_t operator[](std::size_t i) const { return e[i]; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(a.e[i]) + b.e[i];
            if (s > 0xFFFFFFFFull) throw ExponentOverflow("exponent exceeds 32 bits");
            r.e[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& b) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    /// b / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& b) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = b.e[i] - e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }

    static Monomial variable(std::size_t i, std::uint32_t power = 1) {
        Monomial m;
        m.e[i] = power;
        return m;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (auto x : m.e) h = (h ^ x) * 0x100000001B3ull;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

/// Graded reverse lexicographic comparison, x1 > x2 > ... ; true iff a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = kMaxVars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

}  // namespace adesurf
