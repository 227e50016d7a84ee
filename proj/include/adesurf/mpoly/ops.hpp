#pragma once

#include <optional>
#include <vector>

#include "adesurf/mpoly/mpoly.hpp"

namespace adesurf {

/// Coefficient-wise conversion, e.g. Q -> Q(z).
template <class To, class From>
MPoly<To> convert(const MPoly<From>& f) {
    std::vector<typename MPoly<To>::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, To(c));
    return MPoly<To>::from_terms(f.ring(), std::move(terms));
}

/// f(x1^k, ..., xn^k).
template <class K>
MPoly<K> substitute_powers(const MPoly<K>& f, unsigned k) {
    if (k == 0) throw Error("substitute_powers requires k >= 1");
    std::vector<typename MPoly<K>::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            std::uint64_t e = static_cast<std::uint64_t>(m[i]) * k;
            if (e > 0xFFFFFFFFull) throw ExponentOverflow("exponent exceeds 32 bits");
            r[i] = static_cast<std::uint32_t>(e);
        }
        terms.emplace_back(r, c);
    }
    // x -> x^k preserves grevlex comparisons, so the order is kept.
    return MPoly<K>::from_terms(f.ring(), std::move(terms));
}

/// Formal partial derivative in variable `i` (0-based).
template <class K>
MPoly<K> partial_derivative(const MPoly<K>& f, std::size_t i) {
    if (i >= f.nvars()) throw UnknownVariable("derivative variable out of range");
    std::vector<typename MPoly<K>::Term> terms;
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        Monomial r = m;
        r[i] -= 1;
        terms.emplace_back(r, K(static_cast<int>(m[i])) * c);
    }
    return MPoly<K>::from_terms(f.ring(), std::move(terms));
}

template <class K>
std::vector<MPoly<K>> gradient(const MPoly<K>& f) {
    std::vector<MPoly<K>> g;
    for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(partial_derivative(f, i));
    return g;
}

/// Exact value at a point whose coordinates live in X (X constructible from K).
template <class K, class X>
X evaluate(const MPoly<K>& f, const std::vector<X>& point) {
    if (point.size() != f.nvars()) throw FieldMismatch("point dimension does not match the ring");
    std::vector<std::vector<X>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(X(1));
    X acc(0);
    for (const auto& [m, c] : f.terms()) {
        X term(c);
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
            term = term * pw[m[i]];
        }
        acc = acc + term;
    }
    return acc;
}

/// Substitutes images[i] for variable i; terms above `max_degree` in the
/// target ring are dropped (all images must then have no constant-free
/// degree-lowering, which holds for polynomial substitutions).
template <class K, class X>
MPoly<X> compose(const MPoly<K>& f, const std::vector<MPoly<X>>& images, const RingRef& target,
                 std::optional<std::uint64_t> max_degree = std::nullopt) {
    if (images.size() != f.nvars()) throw FieldMismatch("substitution needs one image per variable");
    std::vector<std::vector<MPoly<X>>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(MPoly<X>::constant(target, X(1)));
    std::unordered_map<Monomial, X, MonomialHash> acc;
    for (const auto& [m, c] : f.terms()) {
        MPoly<X> term = MPoly<X>::constant(target, X(c));
        for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= m[i]) pw.push_back(MPoly<X>::multiply(pw.back(), images[i], max_degree));
            term = MPoly<X>::multiply(term, pw[m[i]], max_degree);
        }
        for (const auto& [tm, tc] : term.terms()) {
            auto it = acc.find(tm);
            if (it == acc.end())
                acc.emplace(tm, tc);
            else
                it->second += tc;
        }
    }
    return MPoly<X>::from_map(target, std::move(acc));
}

/// Sum of the degree-d terms.
template <class K>
MPoly<K> graded_component(const MPoly<K>& f, std::uint64_t d) {
    std::vector<typename MPoly<K>::Term> terms;
    for (const auto& t : f.terms())
        if (t.first.degree() == d) terms.push_back(t);
    return MPoly<K>::from_terms(f.ring(), std::move(terms));
}

/// Matrix of second partials.
template <class K>
Matrix<MPoly<K>> hessian(const MPoly<K>& f) {
    const std::size_t n = f.nvars();
    Matrix<MPoly<K>> h(n, std::vector<MPoly<K>>(n, MPoly<K>(f.ring())));
    for (std::size_t i = 0; i < n; ++i) {
        MPoly<K> fi = partial_derivative(f, i);
        for (std::size_t j = i; j < n; ++j) {
            h[i][j] = partial_derivative(fi, j);
            h[j][i] = h[i][j];
        }
    }
    return h;
}

/// Hessian evaluated at the origin, read off the quadratic coefficients.
template <class K>
Matrix<K> hessian_at_origin(const MPoly<K>& f) {
    const std::size_t n = f.nvars();
    Matrix<K> h(n, std::vector<K>(n, K(0)));
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != 2) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) idx.push_back(i);
        if (idx[0] == idx[1]) {
            h[idx[0]][idx[0]] = K(2) * c;
        } else {
            h[idx[0]][idx[1]] = c;
            h[idx[1]][idx[0]] = c;
        }
    }
    return h;
}

/// f(M x): variable i is replaced by sum_j M[i][j] x_j. Throws SingularMatrix.
template <class K>
MPoly<K> linear_change(const MPoly<K>& f, const Matrix<K>& M) {
    const std::size_t n = f.nvars();
    if (M.size() != n) throw SingularMatrix("matrix size does not match the ring");
    (void)inverse(M);
    std::vector<MPoly<K>> images;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename MPoly<K>::Term> terms;
        for (std::size_t j = 0; j < n; ++j) terms.emplace_back(Monomial::variable(j), M[i][j]);
        images.push_back(MPoly<K>::from_terms(f.ring(), std::move(terms)));
    }
    return compose(f, images, f.ring());
}

/// Dehomogenizes a form at `chart` and moves `center` to the origin.
///
/// The center is rescaled so its chart coordinate is 1; the result lives in
/// the (nvars - 1)-variable chart ring with the remaining variables in their
/// original order. `max_degree` truncates the local expansion.
template <class K, class X>
MPoly<X> local_chart(const MPoly<K>& f, std::size_t chart, const std::vector<X>& center,
                     std::optional<std::uint64_t> max_degree = std::nullopt) {
    const std::size_t n = f.nvars();
    if (center.size() != n) throw FieldMismatch("center dimension does not match the ring");
    if (chart >= n) throw UnknownVariable("chart index out of range");
    if (detail::coeff_zero(center[chart])) throw ChartCoordinateZero("center has zero chart coordinate");
    RingRef target = chart_ring(n);
    const X scale = X(1) / center[chart];
    std::vector<MPoly<X>> images;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == chart) {
            images.push_back(MPoly<X>::constant(target, X(1)));
            continue;
        }
        std::vector<typename MPoly<X>::Term> terms;
        terms.emplace_back(Monomial::variable(k++), X(1));
        terms.emplace_back(Monomial{}, center[i] * scale);
        images.push_back(MPoly<X>::from_terms(target, std::move(terms)));
    }
    return compose(f, images, target, max_degree);
}

}  // namespace adesurf
