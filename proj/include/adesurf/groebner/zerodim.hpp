#pragma once

#include <cstdint>
#include <vector>

#include "adesurf/exactnum/numberfield.hpp"
#include "adesurf/groebner/groebner.hpp"

namespace adesurf {

/// One Q-irreducible component of a zero-dimensional scheme: a point with
/// coordinates in the residue field Q[t]/(factor).
struct ZeroDimComponent {
    FieldRef field;
    std::vector<NFElem> point;
};

struct ZeroDimSolution {
    std::vector<ZeroDimComponent> components;
    std::size_t total_point_count = 0;
    std::size_t attempts = 0;             // linear forms tried before shape position
    std::vector<int> separating_form;     // coefficients of the separating linear form
    std::size_t quotient_dimension = 0;   // of the input ideal
    std::size_t radical_dimension = 0;
    std::size_t primes_used = 0;          // primes behind the verified reconstruction
};

/// Points of an affine zero-dimensional ideal over Q. Throws
/// NotZeroDimensional or ShapePositionFailed.
///
/// Candidates come from the reduced algebra modulo large primes, lifted by
/// Chinese remaindering and rational reconstruction. A candidate is only
/// returned after an exact check over each residue field: the generators
/// vanish, the form separates, and the local colengths add up to the
/// quotient dimension, so no point is missing.
ZeroDimSolution zero_dim_points(const Ideal<Rat>& I, gb::ProgressFn progress = {});

/// Same, from a Groebner basis of the ideal for a degree-compatible order.
/// `generators` (default: the basis itself) are used for the exact check.
ZeroDimSolution zero_dim_points(const GroebnerBasis<Rat>& G, const std::vector<QPoly>& generators = {});

/// Sets the last variable to 1 in a homogeneous grevlex basis. The result is
/// a basis of the dehomogenized ideal in the chart ring (leading monomials
/// lose their last exponent).
GroebnerBasis<Rat> dehomogenize_last(const GroebnerBasis<Rat>& G);

/// Points of a zero-dimensional projective scheme given by a homogeneous
/// ideal. The chart is the last variable; when points lie on that
/// hyperplane a seeded projective change moves them off first. Coordinates
/// are mapped back and scaled so that the first nonzero one is 1.
ZeroDimSolution projective_zero_dim_points(const Ideal<Rat>& I, gb::ProgressFn progress = {});

/// Minimal polynomial of multiplication by `a` on Q[x]/I, I given by G.
RatPoly minimal_polynomial(const QPoly& a, const GroebnerBasis<Rat>& G);

/// Seed of every randomized choice in the pipelines.
inline constexpr std::uint64_t kSeed = 0x5EED;

}  // namespace adesurf
