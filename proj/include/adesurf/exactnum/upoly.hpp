#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adesurf/errors.hpp"
#include "adesurf/exactnum/rat.hpp"

namespace adesurf {

namespace detail {
template <class K>
bool coeff_zero(const K& x) {
    return is_zero(x);
}
}  // namespace detail

/// Absolute value rendering plus sign flag, used by the text formatters.
inline std::string coefficient_string(const Rat& r, bool& negative) {
    negative = sgn(r) < 0;
    return to_string(negative ? Rat(-r) : r);
}

std::string format_coefficient_term(const std::string& coeff, bool negative, bool first, const std::string& mono);

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// `K` is a field-like value type: default construction gives zero,
/// construction from `int` embeds the integers, and `is_zero(K)` is
/// found by argument-dependent lookup. Leading zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector.
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UPoly constant(K c) { return UPoly(std::vector<K>{std::move(c)}); }
    static UPoly monomial(K c, std::size_t deg) {
        std::vector<K> v(deg + 1, zero_like(c));
        v[deg] = std::move(c);
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](std::size_t i) const { return c_[i]; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const K& lead() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> v = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        for (std::size_t i = 0; i < s.size(); ++i) v[i] += s[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<K> v = a.c_;
        for (auto& x : v) x = -x;
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0] * b.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (adesurf_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const K& s, const UPoly& a) {
        std::vector<K> v = a.c_;
        for (auto& x : v) x = s * x;
        return UPoly(std::move(v));
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    friend std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.degree() < b.degree()) return {UPoly(), a};
        std::vector<K> r = a.c_;
        std::vector<K> q(a.c_.size() - b.c_.size() + 1, zero_like(a.c_[0]));
        const K inv_lead = K(1) / b.lead();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            const K& top = r[static_cast<std::size_t>(i) + b.c_.size() - 1];
            if (adesurf_is_zero(top)) continue;
            K f = top * inv_lead;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(i) + j] -= f * b.c_[j];
            q[static_cast<std::size_t>(i)] = std::move(f);
        }
        r.resize(b.c_.size() - 1);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divrem(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divrem(a, b).first; }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = K(static_cast<int>(i)) * c_[i];
        return UPoly(std::move(v));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return (K(1) / lead()) * *this;
    }

    template <class X>
    X evaluate(const X& x) const {
        X acc = zero_like(x);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Renders in `var`, highest degree first, e.g. "t^4 - t^2 + 1".
    std::string to_string(const std::string& var = "t") const;

private:
    static bool adesurf_is_zero(const K& x) { return detail::coeff_zero(x); }
    static K zero_like(const K& x) { return x - x; }

    void trim() {
        while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Product of the distinct irreducible factors, monic. Characteristic 0.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
    auto g = gcd(f, f.derivative());
    return (f / g).monic();
}

template <class K>
std::string UPoly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (detail::coeff_zero(c_[i])) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        bool neg = false;
        std::string cs = coefficient_string(c_[i], neg);
        out += format_coefficient_term(cs, neg, first, mono);
        first = false;
    }
    return out;
}

}  // namespace adesurf
