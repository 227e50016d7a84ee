#pragma once

#include <vector>

#include "adesurf/exactnum/rat.hpp"
#include "adesurf/mpoly/monomial.hpp"

namespace adesurf {

/// Projective dimension (-1 for the empty scheme) and degree.
struct HilbertData {
    long dimension = -1;
    Integer degree = 0;

    friend bool operator==(const HilbertData& a, const HilbertData& b) {
        return a.dimension == b.dimension && a.degree == b.degree;
    }
};

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x1..xn]/M for a
/// monomial ideal M, lowest degree first.
std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Krull dimension of k[x]/M and the multiplicity (numerator value at 1
/// after removing all factors 1 - t). The unit ideal gives (-1, 0).
struct KrullData {
    long krull_dimension = -1;
    Integer multiplicity = 0;
};
KrullData krull_data(const std::vector<Monomial>& gens, std::size_t nvars);

/// Hilbert data of the projective scheme cut out by a homogeneous ideal with
/// leading-monomial ideal `gens` in nvars variables.
HilbertData projective_hilbert(const std::vector<Monomial>& gens, std::size_t nvars);

/// Monomials outside the ideal when their number is finite; throws
/// NotZeroDimensional otherwise. Sorted ascending in grevlex.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars);

/// Drops non-minimal generators and duplicates.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace adesurf
