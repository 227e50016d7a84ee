#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adesurf/exactnum/rat.hpp"

namespace adesurf {

// Word-size prime-field helpers. Primes are kept below 2^31 so that a
// product of two residues fits in 64 bits.

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Inverse of a nonzero residue; throws DivisionByZero for 0.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The first `count` primes p > `above` with p = 1 (mod `modulus`).
std::vector<std::uint64_t> primes_congruent_one(std::uint64_t modulus, std::uint64_t above, std::size_t count);

/// r mod p; nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod(const Rat& r, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& z, std::uint64_t p);

/// Rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<Rat> rational_reconstruction(const Integer& a, const Integer& m);

}  // namespace adesurf
