#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adesurf/exactnum/numberfield.hpp"
#include "adesurf/mpoly/linalg.hpp"
#include "adesurf/mpoly/mpoly.hpp"

namespace adesurf {

/// Q(zeta_12) = Q[z]/(z^4 - z^2 + 1), generator named z.
const FieldRef& cyclotomic12();

/// 4x4 matrix over Q(zeta_12) stored as power-basis coordinates over one
/// positive common denominator, reduced so that the gcd of everything is 1.
/// This form is unique, so equality and hashing are plain comparisons.
/// Arithmetic throws Error if an entry leaves the 32-bit range.
class GroupMatrix {
public:
    static constexpr std::size_t kDim = 4;
    static constexpr std::size_t kDeg = 4;

    GroupMatrix();  // identity

    /// Entries must be rational or lie in a field with modulus z^4 - z^2 + 1;
    /// throws FieldMismatch otherwise and SingularMatrix if not invertible.
    static GroupMatrix from_matrix(const Matrix<NFElem>& m);
    static GroupMatrix scalar(const NFElem& s);

    Matrix<NFElem> to_matrix() const;
    NFElem entry(std::size_t i, std::size_t j) const;

    friend GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b);
    friend bool operator==(const GroupMatrix& a, const GroupMatrix& b) = default;
    /// Lexicographic on (denominator, numerators); any fixed total order works.
    friend bool operator<(const GroupMatrix& a, const GroupMatrix& b);

    GroupMatrix transpose() const;
    std::size_t hash() const;
    /// Text rendering used for digests, one row per line.
    std::string to_string() const;

private:
    std::array<std::int32_t, kDim * kDim * kDeg> num_{};
    std::int32_t den_ = 1;
};

struct GroupMatrixHash {
    std::size_t operator()(const GroupMatrix& m) const { return m.hash(); }
};

class MatrixGroup {
public:
    MatrixGroup(std::vector<GroupMatrix> generators, std::vector<GroupMatrix> elements)
        : gens_(std::move(generators)), elems_(std::move(elements)) {}

    const std::vector<GroupMatrix>& generators() const { return gens_; }
    /// Closure in breadth-first discovery order; element 0 is the identity.
    const std::vector<GroupMatrix>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    bool contains(const GroupMatrix& m) const;

private:
    std::vector<GroupMatrix> gens_;
    std::vector<GroupMatrix> elems_;
    mutable std::vector<GroupMatrix> sorted_;
};

inline constexpr std::size_t kDefaultClosureCap = 200000;

/// Breadth-first closure under left multiplication by the generators.
/// Throws CapExceeded once more than `cap` elements are found.
MatrixGroup group_closure(const std::vector<GroupMatrix>& gens, std::size_t cap = kDefaultClosureCap,
                          const std::function<void(std::size_t)>& progress = {});

/// Elements commuting with every generator.
MatrixGroup center(const MatrixGroup& G);

/// One representative per coset of the central subgroup Z.
std::vector<GroupMatrix> transversal(const MatrixGroup& G, const MatrixGroup& Z);

/// f(Mx). Throws FieldMismatch when f's coefficients live in another field.
NFPoly act_on_poly(const NFPoly& f, const GroupMatrix& M);

/// Point of P^3 over Q(zeta_12), first nonzero coordinate equal to 1.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<NFElem> coords);
    const std::vector<NFElem>& coords() const { return c_; }
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ == b.c_; }
    /// Lexicographic on the coordinates' rational power-basis vectors.
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

private:
    std::vector<NFElem> c_;
};

/// How matrices move points: column vectors p -> M p, or p -> M^T p.
enum class PointAction { Matrix, Transpose };
std::string to_string(PointAction a);

ProjectivePoint act_on_point(const GroupMatrix& M, const ProjectivePoint& p, PointAction how);

struct OrbitCertificate {
    ProjectivePoint seed;
    std::vector<ProjectivePoint> points;  // sorted
    PointAction action = PointAction::Matrix;
    std::string generator_digest;
    std::size_t size() const { return points.size(); }
    /// sha256 of the sorted point list, one point per line.
    std::string point_digest() const;
};

/// Orbit by breadth-first search over generator images.
OrbitCertificate projective_orbit(const ProjectivePoint& seed, const MatrixGroup& G,
                                  PointAction how = PointAction::Matrix);

struct TransversalCheck {
    bool consistent = false;
    std::size_t representatives = 0;
    std::size_t bfs_size = 0;
    std::size_t transversal_size = 0;
};

/// Compares the orbit swept by a transversal of Z in G with the BFS orbit.
TransversalCheck orbit_vs_transversal_consistency(const MatrixGroup& G, const MatrixGroup& Z,
                                                  const ProjectivePoint& seed, PointAction how = PointAction::Matrix);

}  // namespace adesurf
