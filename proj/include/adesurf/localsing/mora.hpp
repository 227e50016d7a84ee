#pragma once

#include <optional>
#include <vector>

#include "adesurf/groebner/engine.hpp"
#include "adesurf/groebner/fields.hpp"
#include "adesurf/groebner/groebner.hpp"
#include "adesurf/mpoly/mpoly.hpp"

namespace adesurf {

namespace gb {

/// Mora's tangent cone algorithm for the local negative-degree order.
///
/// With `truncation` set to N every term of degree >= N is dropped, which
/// computes a standard basis of I + m^N; termination is then automatic.
template <class F>
class MoraEngine {
public:
    using E = typename F::E;
    using Poly = EPoly<E>;

    MoraEngine(const F& f, std::size_t nvars, std::optional<std::uint32_t> truncation)
        : f_(f), k_(MonomialOrder::local(nvars)), trunc_(truncation) {}

    const Keyer& keyer() const { return k_; }

    Poly prepare(Poly p) const {
        truncate(p);
        make_monic(p);
        return p;
    }

    /// Weak normal form with ecart-guided reducer choice.
    Poly normal_form(Poly h, const std::vector<Poly>& G) const {
        truncate(h);
        std::vector<Poly> T = G;
        while (!h.empty()) {
            // lowest ecart; the earliest entry wins ties
            const Poly* best = nullptr;
            for (const auto& g : T) {
                if (!divides(g.lm(), h.lm())) continue;
                if (!best || ecart(g) < ecart(*best)) best = &g;
            }
            if (!best) break;
            Poly g = *best;
            if (ecart(g) > ecart(h)) T.push_back(h);
            h = step(h, g);
        }
        return h;
    }

    std::vector<Poly> standard_basis(std::vector<Poly> gens) const {
        std::vector<Poly> G;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        auto add = [&](Poly h) {
            make_monic(h);
            for (std::size_t i = 0; i < G.size(); ++i) pairs.emplace_back(i, G.size());
            G.push_back(std::move(h));
        };
        for (auto& g : gens) {
            Poly h = normal_form(std::move(g), G);
            if (!h.empty()) add(std::move(h));
        }
        while (!pairs.empty()) {
            // lowest lcm degree first, oldest pair on ties
            auto lcm_deg = [&](const std::pair<std::size_t, std::size_t>& pr) {
                return k_.lcm(G[pr.first].lm(), G[pr.second].lm()).deg;
            };
            std::size_t pick = 0;
            for (std::size_t i = 1; i < pairs.size(); ++i)
                if (lcm_deg(pairs[i]) < lcm_deg(pairs[pick])) pick = i;
            auto [a, b] = pairs[pick];
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));
            if (coprime(G[a].lm(), G[b].lm())) continue;
            Poly h = normal_form(spoly(G[a], G[b]), G);
            if (!h.empty()) add(std::move(h));
        }
        return G;
    }

private:
    static std::uint32_t max_degree(const Poly& p) {
        std::uint32_t d = 0;
        for (const auto& m : p.m) d = std::max(d, m.deg);
        return d;
    }
    static std::uint32_t ecart(const Poly& p) { return max_degree(p) - p.lm().deg; }

    void truncate(Poly& p) const {
        if (!trunc_) return;
        Poly r;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.m[i].deg < *trunc_) {
                r.m.push_back(p.m[i]);
                r.c.push_back(std::move(p.c[i]));
            }
        p = std::move(r);
    }

    void make_monic(Poly& p) const {
        if (p.empty() || f_.is_one(p.c[0])) return;
        const E inv = f_.inv(p.c[0]);
        for (auto& x : p.c) x = f_.mul(x, inv);
    }

    // a + s * t * b, merged in order; terms beyond the truncation are dropped.
    Poly axpy(const Poly& a, const E& s, const EMono& t, const Poly& b) const {
        Poly r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            EMono bm;
            if (j < b.size()) bm = k_.mul(t, b.m[j]);
            if (j < b.size() && trunc_ && bm.deg >= *trunc_) {
                ++j;
                continue;
            }
            if (j == b.size() || (i < a.size() && greater(a.m[i], bm))) {
                r.m.push_back(a.m[i]);
                r.c.push_back(a.c[i]);
                ++i;
            } else if (i == a.size() || greater(bm, a.m[i])) {
                r.m.push_back(bm);
                r.c.push_back(f_.mul(s, b.c[j]));
                ++j;
            } else {
                E c = f_.add(a.c[i], f_.mul(s, b.c[j]));
                if (!f_.is_zero(c)) {
                    r.m.push_back(bm);
                    r.c.push_back(std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return r;
    }

    Poly step(const Poly& h, const Poly& g) const {
        const EMono t = k_.quotient(g.lm(), h.lm());
        const E s = f_.neg(f_.mul(h.c[0], f_.inv(g.c[0])));
        return axpy(h, s, t, g);
    }

    Poly spoly(const Poly& a, const Poly& b) const {
        const EMono l = k_.lcm(a.lm(), b.lm());
        Poly left = axpy(Poly{}, f_.one(), k_.quotient(a.lm(), l), a);
        return axpy(left, f_.neg(b.c[0]), k_.quotient(b.lm(), l), b);
    }

    const F& f_;
    Keyer k_;
    std::optional<std::uint32_t> trunc_;
};

}  // namespace gb

/// Standard basis for the local order together with its leading monomials.
template <class K>
struct StandardBasis {
    std::vector<MPoly<K>> basis;
    std::vector<Monomial> leading;
    std::optional<std::uint32_t> truncation;
};

template <class K>
StandardBasis<K> mora_standard_basis(const std::vector<MPoly<K>>& gens,
                                     std::optional<std::uint32_t> truncation = std::nullopt) {
    if (gens.empty()) throw Error("standard basis of the empty list");
    using F = typename gb::FieldFor<K>::type;
    F field;
    const RingRef ring = gens.front().ring();
    gb::MoraEngine<F> eng(field, ring->nvars(), truncation);
    std::vector<gb::EPoly<K>> in;
    for (const auto& g : gens) {
        auto e = eng.prepare(gb::to_engine<F>(g, eng.keyer(), [](const K& c) { return c; }));
        if (!e.empty()) in.push_back(std::move(e));
    }
    StandardBasis<K> sb;
    sb.truncation = truncation;
    for (const auto& p : eng.standard_basis(std::move(in))) {
        sb.basis.push_back(gb::from_engine<K>(p, eng.keyer(), ring));
        sb.leading.push_back(eng.keyer().to_monomial(p.lm()));
    }
    return sb;
}

/// Number of monomials outside the leading ideal (restricted to degree < N
/// when truncated); nullopt when that number is infinite.
std::optional<std::size_t> staircase_size(const std::vector<Monomial>& leading, std::size_t nvars,
                                          std::optional<std::uint32_t> truncation);

}  // namespace adesurf
