#pragma once

#include <cstdint>

#include "adesurf/exactnum/modular.hpp"
#include "adesurf/exactnum/numberfield.hpp"
#include "adesurf/exactnum/rat.hpp"

namespace adesurf::gb {

// Coefficient arithmetic used by the engine. Each struct is a small value
// object; only the prime field carries state.

struct RatField {
    using E = Rat;
    E zero() const { return E(0); }
    E one() const { return E(1); }
    bool is_zero(const E& a) const { return sgn(a) == 0; }
    bool is_one(const E& a) const { return a == 1; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E neg(const E& a) const { return -a; }
    E inv(const E& a) const {
        if (sgn(a) == 0) throw DivisionByZero("inverse of zero");
        return 1 / a;
    }
};

struct ModField {
    using E = std::uint32_t;
    std::uint64_t p;
    explicit ModField(std::uint64_t prime) : p(prime) {
        if (prime < 2 || prime >= (1ull << 31)) throw BadPrime("prime out of supported range");
    }
    E zero() const { return 0; }
    E one() const { return 1; }
    bool is_zero(E a) const { return a == 0; }
    bool is_one(E a) const { return a == 1; }
    E add(E a, E b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<E>(s >= p ? s - p : s);
    }
    E sub(E a, E b) const { return static_cast<E>(a >= b ? a - b : a + p - b); }
    E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
    E neg(E a) const { return static_cast<E>(a == 0 ? 0 : p - a); }
    E inv(E a) const { return static_cast<E>(inv_mod(a, p)); }
};

struct NFField {
    using E = NFElem;
    E zero() const { return E(0); }
    E one() const { return E(1); }
    bool is_zero(const E& a) const { return adesurf::is_zero(a); }
    bool is_one(const E& a) const { return a == E(1); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E neg(const E& a) const { return -a; }
    E inv(const E& a) const { return a.inverse(); }
};

template <class K>
struct FieldFor;
template <>
struct FieldFor<Rat> {
    using type = RatField;
};
template <>
struct FieldFor<NFElem> {
    using type = NFField;
};

}  // namespace adesurf::gb
