#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "adesurf/errors.hpp"
#include "adesurf/exactnum/numberfield.hpp"
#include "adesurf/exactnum/rat.hpp"
#include "adesurf/mpoly/linalg.hpp"
#include "adesurf/mpoly/monomial.hpp"

namespace adesurf {

/// Variable names of a polynomial ring. Two rings are compatible iff their
/// name lists agree.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names);
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of `name`, or nullopt.
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool operator==(const PolyRing& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using RingRef = std::shared_ptr<const PolyRing>;

RingRef make_ring(std::vector<std::string> names);
/// x1, x2, x3, x4.
RingRef projective_ring();
/// Names for the affine chart of an n-variable projective ring: x, y, z for n = 4, else y1..y(n-1).
RingRef chart_ring(std::size_t projective_nvars);

/// Sparse polynomial over K, terms sorted grevlex-descending without zeros.
template <class K>
class MPoly {
public:
    using Term = std::pair<Monomial, K>;

    explicit MPoly(RingRef ring) : ring_(std::move(ring)) {}

    static MPoly from_terms(RingRef ring, std::vector<Term> terms) {
        MPoly p(std::move(ring));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_greater(a.first, b.first); });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (detail::coeff_zero(p.terms_.back().second)) p.terms_.pop_back();
            } else if (!detail::coeff_zero(t.second)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static MPoly from_map(RingRef ring, std::unordered_map<Monomial, K, MonomialHash>&& acc) {
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!detail::coeff_zero(c)) terms.emplace_back(m, std::move(c));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_greater(a.first, b.first); });
        MPoly p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    static MPoly constant(RingRef ring, const K& c) {
        MPoly p(std::move(ring));
        if (!detail::coeff_zero(c)) p.terms_.emplace_back(Monomial{}, c);
        return p;
    }

    static MPoly variable(RingRef ring, std::size_t i) {
        if (i >= ring->nvars()) throw UnknownVariable("variable index " + std::to_string(i + 1) + " out of range");
        MPoly p(std::move(ring));
        p.terms_.emplace_back(Monomial::variable(i), K(1));
        return p;
    }

    static MPoly monomial(RingRef ring, const Monomial& m, const K& c) {
        MPoly p(std::move(ring));
        if (!detail::coeff_zero(c)) p.terms_.emplace_back(m, c);
        return p;
    }

    const RingRef& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->nvars(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.first.degree()));
        return d;
    }

    /// Minimum degree of a term (the order at the origin); -1 for zero.
    long low_degree() const {
        if (terms_.empty()) return -1;
        long d = static_cast<long>(terms_.front().first.degree());
        for (const auto& t : terms_) d = std::min(d, static_cast<long>(t.first.degree()));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto d = terms_.front().first.degree();
        for (const auto& t : terms_)
            if (t.first.degree() != d) return false;
        return true;
    }

    K coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.first == m) return t.second;
        return K(0);
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
        return true;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, true); }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& t : r.terms_) t.second = K(-t.second);
        return r;
    }
    friend MPoly operator*(const K& s, const MPoly& a) {
        MPoly r(a.ring_);
        if (detail::coeff_zero(s)) return r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) {
            K c = s * t.second;
            if (!detail::coeff_zero(c)) r.terms_.emplace_back(t.first, std::move(c));
        }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) { return multiply(a, b, std::nullopt); }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    /// Product dropping every term of total degree above `max_degree`.
    static MPoly multiply(const MPoly& a, const MPoly& b, std::optional<std::uint64_t> max_degree) {
        check_ring(a, b);
        if (a.is_zero() || b.is_zero()) return MPoly(a.ring_);
        if (a.size() == 1 || b.size() == 1) {
            const MPoly& mono = a.size() == 1 ? a : b;
            const MPoly& other = a.size() == 1 ? b : a;
            MPoly r(a.ring_);
            const auto& [m, c] = mono.terms_[0];
            for (const auto& t : other.terms_) {
                Monomial prod = m * t.first;
                if (max_degree && prod.degree() > *max_degree) continue;
                K v = c * t.second;
                if (!detail::coeff_zero(v)) r.terms_.emplace_back(prod, std::move(v));
            }
            return r;  // multiplying by a monomial preserves the order
        }
        std::unordered_map<Monomial, K, MonomialHash> acc;
        acc.reserve(a.size() * b.size() / 2 + 1);
        for (const auto& ta : a.terms_) {
            const auto da = ta.first.degree();
            for (const auto& tb : b.terms_) {
                if (max_degree && da + tb.first.degree() > *max_degree) continue;
                Monomial m = ta.first * tb.first;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, ta.second * tb.second);
                else
                    it->second += ta.second * tb.second;
            }
        }
        return from_map(a.ring_, std::move(acc));
    }

    MPoly pow(unsigned e) const {
        MPoly result = constant(ring_, K(1));
        MPoly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Terms of total degree <= d.
    MPoly truncated(std::uint64_t d) const {
        MPoly r(ring_);
        for (const auto& t : terms_)
            if (t.first.degree() <= d) r.terms_.push_back(t);
        return r;
    }

    MPoly with_ring(RingRef ring) const {
        if (ring->nvars() != nvars()) throw UnknownVariable("ring change must preserve the variable count");
        MPoly r = *this;
        r.ring_ = std::move(ring);
        return r;
    }

private:
    static void check_ring(const MPoly& a, const MPoly& b) {
        if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
            throw FieldMismatch("polynomials belong to different rings");
    }

    static MPoly combine(const MPoly& a, const MPoly& b, bool subtract) {
        check_ring(a, b);
        MPoly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && grevlex_greater(a.terms_[i].first, b.terms_[j].first))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || grevlex_greater(b.terms_[j].first, a.terms_[i].first)) {
                r.terms_.emplace_back(b.terms_[j].first, subtract ? K(-b.terms_[j].second) : b.terms_[j].second);
                ++j;
            } else {
                K c = subtract ? K(a.terms_[i].second - b.terms_[j].second) : K(a.terms_[i].second + b.terms_[j].second);
                if (!detail::coeff_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingRef ring_;
    std::vector<Term> terms_;
};

using QPoly = MPoly<Rat>;
using NFPoly = MPoly<NFElem>;

}  // namespace adesurf
