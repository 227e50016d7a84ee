#include "adesurf/refgroup/refgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "adesurf/digest.hpp"
#include "adesurf/exactnum/factor.hpp"
#include "adesurf/mpoly/ops.hpp"

namespace adesurf {

const FieldRef& cyclotomic12() {
    static const FieldRef k = NumberField::create(cyclotomic_polynomial(12), "z", "Q(zeta12)");
    return k;
}

namespace {

constexpr std::size_t N = GroupMatrix::kDim;
constexpr std::size_t D = GroupMatrix::kDeg;

std::size_t at(std::size_t i, std::size_t j, std::size_t c) { return (i * N + j) * D + c; }

using Wide = __int128;

Wide wgcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int32_t narrow(Wide v) {
    if (v > INT32_MAX || v < INT32_MIN) throw Error("group matrix entry exceeds the compact range");
    return static_cast<std::int32_t>(v);
}

const FieldRef& checked_field(const NFElem& x) {
    if (x.field() && !x.field()->same_as(*cyclotomic12()))
        throw FieldMismatch("group matrices live over Q(zeta12), got " + x.field()->label());
    return cyclotomic12();
}

std::vector<Rat> coords4(const NFElem& x) {
    checked_field(x);
    std::vector<Rat> v(D, Rat(0));
    const auto& c = x.coords();
    for (std::size_t i = 0; i < c.size() && i < D; ++i) v[i] = c[i];
    return v;
}

}  // namespace

GroupMatrix::GroupMatrix() {
    for (std::size_t i = 0; i < N; ++i) num_[at(i, i, 0)] = 1;
}

GroupMatrix GroupMatrix::from_matrix(const Matrix<NFElem>& m) {
    if (m.size() != N) throw SingularMatrix("group matrices are 4x4");
    for (const auto& row : m)
        if (row.size() != N) throw SingularMatrix("group matrices are 4x4");
    std::vector<Rat> all;
    Integer den = 1;
    for (const auto& row : m)
        for (const auto& x : row)
            for (const auto& c : coords4(x)) {
                all.push_back(c);
                den = lcm(den, Integer(c.get_den()));
            }
    GroupMatrix g;
    if (!den.fits_sint_p()) throw Error("group matrix denominator exceeds the compact range");
    g.den_ = static_cast<std::int32_t>(den.get_si());
    for (std::size_t k = 0; k < all.size(); ++k) {
        Integer v = all[k].get_num() * (den / all[k].get_den());
        if (!v.fits_sint_p()) throw Error("group matrix entry exceeds the compact range");
        g.num_[k] = static_cast<std::int32_t>(v.get_si());
    }
    Matrix<NFElem> lifted = m;
    for (auto& row : lifted)
        for (auto& x : row) x = x + NFElem::embed(cyclotomic12(), Rat(0));
    if (rank(lifted) < N) throw SingularMatrix("group matrix is singular");
    return g;
}

GroupMatrix GroupMatrix::scalar(const NFElem& s) {
    Matrix<NFElem> m(N, std::vector<NFElem>(N, NFElem::embed(cyclotomic12(), Rat(0))));
    for (std::size_t i = 0; i < N; ++i) m[i][i] = s;
    return from_matrix(m);
}

NFElem GroupMatrix::entry(std::size_t i, std::size_t j) const {
    std::vector<Rat> v(D);
    for (std::size_t c = 0; c < D; ++c) v[c] = Rat(Integer(num_[at(i, j, c)]), Integer(den_));
    for (auto& r : v) r.canonicalize();
    return NFElem(cyclotomic12(), std::move(v));
}

Matrix<NFElem> GroupMatrix::to_matrix() const {
    Matrix<NFElem> m(N, std::vector<NFElem>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m[i][j] = entry(i, j);
    return m;
}

GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b) {
    std::array<Wide, N * N * D> acc{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Wide p[2 * D - 1] = {};
            for (std::size_t k = 0; k < N; ++k) {
                const std::int32_t* x = &a.num_[at(i, k, 0)];
                const std::int32_t* y = &b.num_[at(k, j, 0)];
                for (std::size_t u = 0; u < D; ++u) {
                    if (!x[u]) continue;
                    for (std::size_t v = 0; v < D; ++v) p[u + v] += static_cast<Wide>(x[u]) * y[v];
                }
            }
            // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
            p[0] -= p[6] + p[4];
            p[1] -= p[5];
            p[2] += p[4];
            p[3] += p[5];
            for (std::size_t c = 0; c < D; ++c) acc[at(i, j, c)] = p[c];
        }
    Wide den = static_cast<Wide>(a.den_) * b.den_;
    Wide g = den;
    for (auto v : acc) g = wgcd(g, v);
    GroupMatrix r;
    r.den_ = narrow(den / g);
    for (std::size_t k = 0; k < acc.size(); ++k) r.num_[k] = narrow(acc[k] / g);
    return r;
}

bool operator<(const GroupMatrix& a, const GroupMatrix& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
}

GroupMatrix GroupMatrix::transpose() const {
    GroupMatrix t = *this;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t c = 0; c < D; ++c) t.num_[at(i, j, c)] = num_[at(j, i, c)];
    return t;
}

std::size_t GroupMatrix::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::int32_t v) {
        h ^= static_cast<std::uint32_t>(v);
        h *= 1099511628211ull;
    };
    mix(den_);
    for (auto v : num_) mix(v);
    return static_cast<std::size_t>(h);
}

std::string GroupMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
        s += "[";
        for (std::size_t j = 0; j < N; ++j) {
            if (j) s += ", ";
            s += entry(i, j).to_string();
        }
        s += "]\n";
    }
    return s;
}

bool MatrixGroup::contains(const GroupMatrix& m) const {
    if (sorted_.size() != elems_.size()) {
        sorted_ = elems_;
        std::sort(sorted_.begin(), sorted_.end());
    }
    return std::binary_search(sorted_.begin(), sorted_.end(), m);
}

MatrixGroup group_closure(const std::vector<GroupMatrix>& gens, std::size_t cap,
                          const std::function<void(std::size_t)>& progress) {
    std::vector<GroupMatrix> elems{GroupMatrix()};
    std::unordered_set<GroupMatrix, GroupMatrixHash> seen{GroupMatrix()};
    // Finite groups: the monoid closure from the identity is the group.
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& s : gens) {
            GroupMatrix m;
            try {
                m = s * elems[head];
            } catch (const Error&) {
                // entries of a finite group stay bounded
                throw CapExceeded("group closure: entries grow without bound");
            }
            if (!seen.insert(m).second) continue;
            if (elems.size() >= cap) throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
            elems.push_back(std::move(m));
        }
        if (progress && head % 10000 == 0) progress(elems.size());
    }
    return MatrixGroup(gens, std::move(elems));
}

MatrixGroup center(const MatrixGroup& G) {
    std::vector<GroupMatrix> z;
    for (const auto& e : G.elements()) {
        bool central = true;
        for (const auto& s : G.generators())
            if (!(e * s == s * e)) {
                central = false;
                break;
            }
        if (central) z.push_back(e);
    }
    return MatrixGroup(z, z);
}

std::vector<GroupMatrix> transversal(const MatrixGroup& G, const MatrixGroup& Z) {
    std::unordered_set<GroupMatrix, GroupMatrixHash> cosets;
    std::vector<GroupMatrix> reps;
    for (const auto& g : G.elements()) {
        GroupMatrix key = g;
        for (const auto& z : Z.elements()) key = std::min(key, z * g);
        if (cosets.insert(key).second) reps.push_back(g);
    }
    return reps;
}

NFPoly act_on_poly(const NFPoly& f, const GroupMatrix& M) {
    for (const auto& [m, c] : f.terms()) checked_field(c);
    return linear_change(f, M.to_matrix());
}

ProjectivePoint::ProjectivePoint(std::vector<NFElem> coords) : c_(std::move(coords)) {
    if (c_.size() != N) throw Error("projective points have 4 coordinates");
    const FieldRef& k = cyclotomic12();
    std::size_t first = N;
    for (std::size_t i = 0; i < N; ++i) {
        checked_field(c_[i]);
        c_[i] = c_[i] + NFElem::embed(k, Rat(0));
        if (first == N && !is_zero(c_[i])) first = i;
    }
    if (first == N) throw Error("the zero vector is not a projective point");
    const NFElem inv = c_[first].inverse();
    for (auto& x : c_) x = x * inv;
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    for (std::size_t i = 0; i < N; ++i) {
        const auto& x = a.c_[i].coords();
        const auto& y = b.c_[i].coords();
        if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
    return false;
}

std::string ProjectivePoint::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < N; ++i) {
        if (i) s += ", ";
        s += c_[i].to_string();
    }
    return s + "]";
}

std::string to_string(PointAction a) { return a == PointAction::Matrix ? "column p -> M p" : "column p -> M^T p"; }

ProjectivePoint act_on_point(const GroupMatrix& M, const ProjectivePoint& p, PointAction how) {
    std::vector<NFElem> out(N, NFElem::embed(cyclotomic12(), Rat(0)));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const NFElem e = how == PointAction::Matrix ? M.entry(i, j) : M.entry(j, i);
            if (!is_zero(e) && !is_zero(p.coords()[j])) out[i] += e * p.coords()[j];
        }
    return ProjectivePoint(std::move(out));
}

std::string OrbitCertificate::point_digest() const {
    std::string s;
    for (const auto& p : points) s += p.to_string() + "\n";
    return sha256_hex(s);
}

OrbitCertificate projective_orbit(const ProjectivePoint& seed, const MatrixGroup& G, PointAction how) {
    std::set<ProjectivePoint> seen{seed};
    std::deque<ProjectivePoint> queue{seed};
    while (!queue.empty()) {
        ProjectivePoint p = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : G.generators()) {
            ProjectivePoint q = act_on_point(s, p, how);
            if (seen.insert(q).second) queue.push_back(std::move(q));
        }
    }
    std::string gens;
    for (const auto& s : G.generators()) gens += s.to_string() + "\n";
    return OrbitCertificate{seed, {seen.begin(), seen.end()}, how, sha256_hex(gens)};
}

TransversalCheck orbit_vs_transversal_consistency(const MatrixGroup& G, const MatrixGroup& Z,
                                                  const ProjectivePoint& seed, PointAction how) {
    TransversalCheck r;
    const auto reps = transversal(G, Z);
    r.representatives = reps.size();
    std::set<ProjectivePoint> swept;
    for (const auto& g : reps) swept.insert(act_on_point(g, seed, how));
    const auto bfs = projective_orbit(seed, G, how);
    r.bfs_size = bfs.size();
    r.transversal_size = swept.size();
    r.consistent = std::equal(swept.begin(), swept.end(), bfs.points.begin(), bfs.points.end());
    return r;
}

}  // namespace adesurf
