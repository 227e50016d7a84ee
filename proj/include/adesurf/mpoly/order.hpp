#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "adesurf/mpoly/monomial.hpp"

namespace adesurf {

/// Monomial order on an nvars-variable ring.
///
/// `perm[i]` names the variable that plays the role of position i, so the
/// identity permutation ranks x1 first. Global kinds are well-orders; the
/// local kind ranks 1 above every variable and is used for standard bases
/// in the local ring at the origin.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, BlockElimination, LocalNegGrevlex };

    static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder(Kind::Grevlex, nvars, 0); }
    static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(Kind::Lex, nvars, 0); }
    /// Eliminates the first `block` positions: grevlex on them, ties broken by grevlex on the rest.
    static MonomialOrder elimination(std::size_t nvars, std::size_t block) {
        return MonomialOrder(Kind::BlockElimination, nvars, block);
    }
    static MonomialOrder local(std::size_t nvars) { return MonomialOrder(Kind::LocalNegGrevlex, nvars, 0); }

    MonomialOrder with_permutation(std::vector<std::size_t> perm) const {
        MonomialOrder o = *this;
        o.perm_ = std::move(perm);
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t block() const { return block_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    bool is_global() const { return kind_ != Kind::LocalNegGrevlex; }
    /// True when the order refines total degree (needed for homogeneous Hilbert data).
    bool is_degree_compatible() const { return kind_ == Kind::Grevlex; }

    /// True iff a > b.
    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Grevlex:
                return grevlex_range(a, b, 0, nvars_) > 0;
            case Kind::Lex:
                for (std::size_t i = 0; i < nvars_; ++i) {
                    auto x = a[perm_[i]], y = b[perm_[i]];
                    if (x != y) return x > y;
                }
                return false;
            case Kind::BlockElimination: {
                int c = grevlex_range(a, b, 0, block_);
                if (c != 0) return c > 0;
                return grevlex_range(a, b, block_, nvars_) > 0;
            }
            case Kind::LocalNegGrevlex: {
                std::uint64_t da = 0, db = 0;
                for (std::size_t i = 0; i < nvars_; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da < db;
                for (std::size_t i = nvars_; i-- > 0;) {
                    auto x = a[perm_[i]], y = b[perm_[i]];
                    if (x != y) return x < y;
                }
                return false;
            }
        }
        return false;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::Grevlex: return "grevlex";
            case Kind::Lex: return "lex";
            case Kind::BlockElimination: return "elim(" + std::to_string(block_) + ")";
            case Kind::LocalNegGrevlex: return "ds";
        }
        return "?";
    }

private:
    MonomialOrder(Kind k, std::size_t nvars, std::size_t block) : kind_(k), nvars_(nvars), block_(block), perm_(nvars) {
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    }

    // +1 if a > b on positions [lo, hi), -1 if a < b, 0 if equal there.
    int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[perm_[i]];
            db += b[perm_[i]];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            auto x = a[perm_[i]], y = b[perm_[i]];
            if (x != y) return x < y ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::size_t nvars_;
    std::size_t block_;
    std::vector<std::size_t> perm_;
};

}  // namespace adesurf
