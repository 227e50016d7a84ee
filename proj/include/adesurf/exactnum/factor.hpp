#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adesurf/exactnum/upoly.hpp"

namespace adesurf {

using RatPoly = UPoly<Rat>;

/// Irreducible monic factor with its multiplicity.
struct FactorPower {
    RatPoly factor;
    int multiplicity = 1;
};

/// Yun's square-free decomposition: monic, pairwise coprime, square-free
/// parts a_i with f = lc * prod a_i^i. Entries with a_i = 1 are omitted.
std::vector<FactorPower> squarefree_decomposition(const RatPoly& f);

/// Complete factorization over Q into monic irreducibles.
///
/// Square-free decomposition, factorization modulo a good prime
/// (distinct-degree plus Cantor-Zassenhaus), multifactor Hensel lifting
/// and subset recombination. The prime is chosen among the first five
/// primes p >= 101 not dividing the leading coefficient for which f stays
/// square-free, taking the one with the fewest modular factors. Output is
/// sorted by (degree, coefficients). Throws ZeroPolynomial for f = 0.
std::vector<FactorPower> factor_rational_upoly(const RatPoly& f);

/// True iff f is irreducible over Q (constants are not).
bool is_irreducible(const RatPoly& f);

/// The n-th cyclotomic polynomial.
RatPoly cyclotomic_polynomial(unsigned n);

namespace modp {

/// Dense polynomial over F_p, lowest degree first, trimmed.
using Poly = std::vector<std::uint64_t>;

/// Monic irreducible factors of a square-free monic f over F_p (p odd),
/// sorted by degree then coefficients. Randomness is seeded deterministically.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p);

/// Sorted roots in [0, p) of f mod p; f must not vanish identically mod p.
std::vector<std::uint64_t> roots(const RatPoly& f, std::uint64_t p);

/// Degrees of the irreducible factors of f mod p (with repetition),
/// or empty if f is not square-free mod p or p divides the leading coefficient.
std::vector<int> factor_degrees(const RatPoly& f, std::uint64_t p);

}  // namespace modp

}  // namespace adesurf
