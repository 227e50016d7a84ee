#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adesurf/exactnum/upoly.hpp"
#include "adesurf/localsing/mora.hpp"
#include "adesurf/mpoly/linalg.hpp"
#include "adesurf/mpoly/ops.hpp"

namespace adesurf {

/// Germ at the origin of a polynomial with a critical point there. With
/// `exact_below` = N only the jet of degree < N is known; higher terms are
/// dropped and every invariant stays inside that jet.
template <class K>
class LocalFunction {
public:
    explicit LocalFunction(MPoly<K> f, std::optional<std::uint32_t> exact_below = std::nullopt)
        : f_(exact_below ? truncate_degree(f, *exact_below) : std::move(f)), exact_below_(exact_below) {
        if (exact_below_ && *exact_below_ < 3) throw JetTooShort("a germ needs at least its 2-jet");
        const std::vector<K> origin(f_.nvars(), K(0));
        if (!detail::coeff_zero(evaluate(f_, origin))) throw Error("local function does not vanish at the origin");
        for (const auto& d : gradient(f_))
            if (!detail::coeff_zero(evaluate(d, origin))) throw Error("origin is not a critical point");
    }

    const MPoly<K>& poly() const { return f_; }
    std::size_t nvars() const { return f_.nvars(); }
    std::optional<std::uint32_t> exact_below() const { return exact_below_; }
    /// Bound for the partial derivatives, one degree lower.
    std::optional<std::uint32_t> gradient_exact_below() const {
        if (!exact_below_) return std::nullopt;
        return *exact_below_ - 1;
    }

private:
    static MPoly<K> truncate_degree(const MPoly<K>& f, std::uint32_t N) {
        std::vector<typename MPoly<K>::Term> t;
        for (const auto& [m, c] : f.terms())
            if (m.degree() < N) t.emplace_back(m, c);
        return MPoly<K>::from_terms(f.ring(), std::move(t));
    }

    MPoly<K> f_;
    std::optional<std::uint32_t> exact_below_;
};

enum class SingularityType { A, D, E, NotSimple, NotIsolated };

enum class CubicRootType { ThreeDistinct, OneDouble, Triple, Zero };

std::string to_string(CubicRootType t);

struct SingularityReport {
    int corank = 0;
    std::optional<std::size_t> milnor;  // nullopt: not isolated
    std::optional<std::size_t> tjurina;
    SingularityType type = SingularityType::NotSimple;
    int index = 0;  // k of A_k, D_k, E_k
    std::optional<CubicRootType> evidence;
    std::string diagnostic;

    /// "A1", "D4", "E8", "NotSimple", "NotIsolated".
    std::string type_name() const;
};

namespace localsing {

inline constexpr std::uint32_t kJetCap = 16;
// Truncation orders tried before falling back to an untruncated basis.
inline constexpr std::uint32_t kTruncationCap = 24;

/// dim of the local algebra O/I at the origin, nullopt when infinite.
///
/// c_N = dim O/(I + m^N) is nondecreasing and c_N = c_{N+1} forces
/// m^N in I by Nakayama, so the first repeated value is the answer.
///
/// With `exact_below` set, the generators are only known in degrees below
/// that bound (a jet); N stays within it, and a missing repeat throws
/// JetTooShort instead of falling back to an untruncated basis.
template <class K>
std::optional<std::size_t> local_colength(const std::vector<MPoly<K>>& gens,
                                          std::optional<std::uint32_t> exact_below = std::nullopt) {
    std::vector<MPoly<K>> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) {
        if (exact_below) throw JetTooShort("all generators vanish in the known jet");
        return std::nullopt;
    }
    const std::size_t n = nz.front().nvars();
    const std::uint32_t last = exact_below ? *exact_below : kTruncationCap;
    std::optional<std::size_t> prev;
    for (std::uint32_t N = 1; N <= last; ++N) {
        auto sb = mora_standard_basis(nz, N);
        auto c = staircase_size(sb.leading, n, N);
        if (prev && *c == *prev) return c;
        prev = c;
    }
    if (exact_below) throw JetTooShort("local colength undecided below degree " + std::to_string(last));
    auto sb = mora_standard_basis(nz);
    return staircase_size(sb.leading, n, std::nullopt);
}

}  // namespace localsing

template <class K>
std::optional<std::size_t> milnor_number(const LocalFunction<K>& f) {
    return localsing::local_colength(gradient(f.poly()), f.gradient_exact_below());
}

template <class K>
std::optional<std::size_t> tjurina_number(const LocalFunction<K>& f) {
    auto gens = gradient(f.poly());
    gens.insert(gens.begin(), f.poly());
    return localsing::local_colength(gens, f.gradient_exact_below());
}

template <class K>
int hessian_corank(const LocalFunction<K>& f) {
    return static_cast<int>(f.nvars() - rank(hessian_at_origin(f.poly())));
}

namespace localsing {

/// Invertible T with f(Tx) having diagonal quadratic part, nonzero entries
/// first; the kernel variables keep their relative order. Returns T and the
/// diagonal.
template <class K>
std::pair<Matrix<K>, std::vector<K>> diagonalize_quadratic(const MPoly<K>& f) {
    const std::size_t n = f.nvars();
    Matrix<K> A = hessian_at_origin(f);
    for (auto& row : A)
        for (auto& x : row) x = x / K(2);
    Matrix<K> T = identity_matrix<K>(n);
    auto congruent = [&](const Matrix<K>& E) {
        T = T * E;
        A = transpose(E) * A * E;
    };
    std::size_t k = 0;
    while (k < n) {
        std::optional<std::size_t> piv;
        for (std::size_t j = k; j < n && !piv; ++j)
            if (!detail::coeff_zero(A[j][j])) piv = j;
        if (!piv) {
            for (std::size_t j = k; j < n && !piv; ++j)
                for (std::size_t l = j + 1; l < n && !piv; ++l)
                    if (!detail::coeff_zero(A[j][l])) {
                        // x_l -> x_l + x_j makes the (j, j) entry 2 a_jl
                        Matrix<K> E = identity_matrix<K>(n);
                        E[l][j] = K(1);
                        congruent(E);
                        piv = j;
                    }
        }
        if (!piv) break;
        if (*piv != k) {
            // rotate column piv into position k
            Matrix<K> P(n, std::vector<K>(n, K(0)));
            std::vector<std::size_t> order;
            for (std::size_t i = 0; i < n; ++i)
                if (i != *piv) order.push_back(i);
            order.insert(order.begin() + static_cast<std::ptrdiff_t>(k), *piv);
            for (std::size_t c = 0; c < n; ++c) P[order[c]][c] = K(1);
            congruent(P);
        }
        Matrix<K> E = identity_matrix<K>(n);
        for (std::size_t l = k + 1; l < n; ++l) E[k][l] = -(A[k][l] / A[k][k]);
        congruent(E);
        ++k;
    }
    std::vector<K> lambda;
    for (std::size_t i = 0; i < k; ++i) lambda.push_back(A[i][i]);
    return {T, lambda};
}

}  // namespace localsing

/// Splitting lemma up to total degree `jet`: the part of f in the kernel
/// variables once all rank variables are squares. Variables are named x or
/// x, y.
template <class K>
MPoly<K> splitting_residual(const LocalFunction<K>& lf, std::uint32_t jet) {
    if (lf.exact_below() && jet >= *lf.exact_below()) throw JetTooShort("jet order beyond the known terms");
    const std::size_t n = lf.nvars();
    auto [T, lambda] = localsing::diagonalize_quadratic(lf.poly());
    const std::size_t r = lambda.size();
    const std::size_t corank = n - r;
    if (corank >= 3) throw CorankThree("splitting lemma needs corank at most 2");
    const RingRef ring = lf.poly().ring();

    std::vector<MPoly<K>> images;
    for (std::size_t i = 0; i < n; ++i) {
        MPoly<K> img = MPoly<K>::constant(ring, K(0));
        for (std::size_t j = 0; j < n; ++j)
            if (!detail::coeff_zero(T[i][j])) img = img + MPoly<K>::monomial(ring, Monomial::variable(j), T[i][j]);
        images.push_back(std::move(img));
    }
    MPoly<K> f = compose(lf.poly(), images, ring, std::uint64_t{jet});

    for (std::uint32_t d = 3; d <= jet; ++d) {
        std::vector<std::vector<typename MPoly<K>::Term>> P(r);
        for (const auto& [m, c] : f.terms()) {
            if (m.degree() != d) continue;
            std::size_t i = 0;
            while (i < r && m[i] == 0) ++i;
            if (i == r) continue;
            Monomial q = m;
            q[i] -= 1;
            P[i].emplace_back(q, c / (K(2) * lambda[i]));
        }
        std::vector<MPoly<K>> sub;
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            MPoly<K> xi = MPoly<K>::variable(ring, i);
            if (i < r && !P[i].empty()) {
                xi = xi - MPoly<K>::from_terms(ring, std::move(P[i]));
                any = true;
            }
            sub.push_back(std::move(xi));
        }
        if (any) f = compose(f, sub, ring, std::uint64_t{jet});
    }

    const RingRef out = corank == 1 ? make_ring({"x"}) : corank == 2 ? make_ring({"x", "y"}) : make_ring({"x"});
    std::vector<typename MPoly<K>::Term> terms;
    for (const auto& [m, c] : f.terms()) {
        bool kernel_only = true;
        for (std::size_t i = 0; i < r; ++i)
            if (m[i]) kernel_only = false;
        if (!kernel_only) continue;
        Monomial km;
        for (std::size_t i = r; i < n; ++i) km[i - r] = m[i];
        terms.emplace_back(km, c);
    }
    return MPoly<K>::from_terms(out, std::move(terms));
}

/// Default jet: milnor number + 2, capped.
template <class K>
MPoly<K> splitting_residual(const LocalFunction<K>& lf) {
    const auto mu = milnor_number(lf);
    std::uint32_t jet = localsing::kJetCap;
    if (mu && *mu + 2 < jet) jet = static_cast<std::uint32_t>(*mu + 2);
    if (lf.exact_below() && jet >= *lf.exact_below()) jet = *lf.exact_below() - 1;
    return splitting_residual(lf, jet);
}

/// Root pattern over the algebraic closure of a binary cubic form.
template <class K>
CubicRootType binary_cubic_root_type(const MPoly<K>& c) {
    if (c.is_zero()) return CubicRootType::Zero;
    if (c.nvars() != 2 || !c.is_homogeneous() || c.total_degree() != 3)
        throw NotHomogeneous("expected a binary cubic form");
    std::vector<K> coeffs(4, K(0));
    for (const auto& [m, a] : c.terms()) coeffs[m[0]] = a;
    UPoly<K> p(coeffs);
    const int deg = p.degree();
    const int finite = deg - gcd(p, p.derivative()).degree();
    const int distinct = finite + (deg < 3 ? 1 : 0);
    return distinct == 3 ? CubicRootType::ThreeDistinct
                         : distinct == 2 ? CubicRootType::OneDouble : CubicRootType::Triple;
}

template <class K>
SingularityReport classify_ade(const LocalFunction<K>& f) {
    SingularityReport rep;
    rep.corank = hessian_corank(f);
    try {
        rep.milnor = milnor_number(f);
        rep.tjurina = tjurina_number(f);
    } catch (const JetTooShort& e) {
        rep.type = SingularityType::NotSimple;
        rep.diagnostic = e.what();
        return rep;
    }
    if (!rep.milnor) {
        rep.type = SingularityType::NotIsolated;
        return rep;
    }
    const std::size_t mu = *rep.milnor;
    auto fail = [&](std::string why) {
        rep.type = SingularityType::NotSimple;
        rep.index = 0;
        rep.diagnostic = std::move(why);
        return rep;
    };
    switch (rep.corank) {
        case 0:
            if (mu != 1) return fail("nondegenerate critical point with milnor number " + std::to_string(mu));
            rep.type = SingularityType::A;
            rep.index = 1;
            return rep;
        case 1:
            rep.type = SingularityType::A;
            rep.index = static_cast<int>(mu);
            return rep;
        case 2:
            if (mu + 2 > localsing::kJetCap) return fail("milnor number beyond the jet cap");
            if (f.exact_below() && *f.exact_below() <= 3) return fail("cubic part outside the known jet");
            break;
        default:
            return fail("corank " + std::to_string(rep.corank));
    }
    const auto cubic = graded_component(splitting_residual(f, 3), 3);
    const CubicRootType rt = binary_cubic_root_type(cubic);
    rep.evidence = rt;
    switch (rt) {
        case CubicRootType::ThreeDistinct:
            if (mu != 4) return fail("three distinct cubic roots but milnor number " + std::to_string(mu));
            rep.type = SingularityType::D;
            rep.index = 4;
            return rep;
        case CubicRootType::OneDouble:
            if (mu < 5) return fail("double cubic root but milnor number " + std::to_string(mu));
            rep.type = SingularityType::D;
            rep.index = static_cast<int>(mu);
            return rep;
        case CubicRootType::Triple:
            if (mu < 6 || mu > 8) return fail("triple cubic root with milnor number " + std::to_string(mu));
            rep.type = SingularityType::E;
            rep.index = static_cast<int>(mu);
            return rep;
        case CubicRootType::Zero:
            return fail("vanishing cubic part in corank 2");
    }
    return rep;
}

}  // namespace adesurf
