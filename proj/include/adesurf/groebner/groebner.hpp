#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adesurf/groebner/engine.hpp"
#include "adesurf/groebner/fields.hpp"
#include "adesurf/groebner/hilbert.hpp"
#include "adesurf/mpoly/mpoly.hpp"
#include "adesurf/mpoly/order.hpp"

namespace adesurf {

template <class K>
struct Ideal {
    RingRef ring;
    std::vector<MPoly<K>> gens;

    Ideal(RingRef r, std::vector<MPoly<K>> g) : ring(std::move(r)) {
        for (auto& p : g) {
            if (p.is_zero()) continue;
            if (!(*p.ring() == *ring)) throw FieldMismatch("generator from a different ring");
            gens.push_back(std::move(p));
        }
    }

    bool is_homogeneous() const {
        for (const auto& g : gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    Ideal operator+(const Ideal& o) const {
        auto g = gens;
        g.insert(g.end(), o.gens.begin(), o.gens.end());
        return Ideal(ring, std::move(g));
    }
};

template <class K>
struct GroebnerBasis {
    RingRef ring;
    MonomialOrder order;
    std::vector<MPoly<K>> basis;  // monic, ascending leading monomials
    std::vector<Monomial> leading;
    std::string provenance;

    bool is_unit() const { return leading.size() == 1 && leading[0].degree() == 0; }
};

namespace gb {

template <class F, class K, class Conv>
EPoly<typename F::E> to_engine(const MPoly<K>& p, const Keyer& k, Conv conv) {
    EPoly<typename F::E> e;
    std::vector<std::pair<EMono, typename F::E>> t;
    t.reserve(p.size());
    std::uint32_t deg = 0;
    for (const auto& [m, c] : p.terms()) {
        t.emplace_back(k.make(m), conv(c));
        deg = std::max<std::uint32_t>(deg, static_cast<std::uint32_t>(m.degree()));
    }
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return greater(a.first, b.first); });
    for (auto& [m, c] : t) {
        e.m.push_back(m);
        e.c.push_back(std::move(c));
    }
    e.sugar = deg;
    return e;
}

template <class K, class E>
MPoly<K> from_engine(const EPoly<E>& e, const Keyer& k, const RingRef& ring) {
    std::vector<typename MPoly<K>::Term> terms;
    terms.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) terms.emplace_back(k.to_monomial(e.m[i]), K(e.c[i]));
    return MPoly<K>::from_terms(ring, std::move(terms));
}

/// Short digest of an ideal's generators, recorded as provenance.
std::string ideal_digest(const std::vector<std::string>& generator_texts);

}  // namespace gb

/// Reduced Groebner basis for a global order.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& ord, gb::ProgressFn progress = {}) {
    using F = typename gb::FieldFor<K>::type;
    F field;
    gb::Engine<F> eng(field, ord);
    if (progress) eng.set_progress(std::move(progress));
    std::vector<gb::EPoly<K>> gens;
    for (const auto& g : I.gens) gens.push_back(gb::to_engine<F>(g, eng.keyer(), [](const K& c) { return c; }));
    auto basis = eng.run(std::move(gens));
    GroebnerBasis<K> G{I.ring, ord, {}, {}, {}};
    for (const auto& b : basis) {
        G.basis.push_back(gb::from_engine<K>(b, eng.keyer(), I.ring));
        G.leading.push_back(eng.keyer().to_monomial(b.lm()));
    }
    return G;
}

/// Remainder of f modulo G: no term is divisible by a leading monomial of G.
template <class K>
MPoly<K> normal_form(const MPoly<K>& f, const GroebnerBasis<K>& G) {
    using F = typename gb::FieldFor<K>::type;
    F field;
    gb::Engine<F> eng(field, G.order);
    std::vector<gb::EPoly<K>> polys;
    for (const auto& g : G.basis) polys.push_back(gb::to_engine<F>(g, eng.keyer(), [](const K& c) { return c; }));
    std::vector<const gb::EPoly<K>*> ptrs;
    for (const auto& p : polys) ptrs.push_back(&p);
    auto r = eng.reduce(gb::to_engine<F>(f, eng.keyer(), [](const K& c) { return c; }), ptrs);
    return gb::from_engine<K>(r, eng.keyer(), f.ring());
}

/// Projective Hilbert data of a homogeneous ideal from its basis.
template <class K>
HilbertData hilbert_dim_deg(const GroebnerBasis<K>& G) {
    for (const auto& g : G.basis)
        if (!g.is_homogeneous()) throw NotHomogeneous("Hilbert data needs a homogeneous ideal");
    return projective_hilbert(G.leading, G.ring->nvars());
}

/// Affine Krull dimension and, when zero-dimensional, the quotient's vector
/// space dimension (degree-compatible order required for the latter to be
/// meaningful beyond dimension 0).
template <class K>
KrullData affine_dimension(const GroebnerBasis<K>& G) {
    return krull_data(G.leading, G.ring->nvars());
}

/// I intersected with the subring in the `keep` variables.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& keep) {
    const std::size_t n = I.ring->nvars();
    std::vector<bool> kept(n, false);
    for (auto k : keep) {
        if (k >= n) throw UnknownVariable("kept variable out of range");
        kept[k] = true;
    }
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) perm.push_back(i);
    const std::size_t block = perm.size();
    for (std::size_t i = 0; i < n; ++i)
        if (kept[i]) perm.push_back(i);
    auto ord = MonomialOrder::elimination(n, block).with_permutation(perm);
    auto G = buchberger(I, ord);
    std::vector<MPoly<K>> out;
    for (const auto& g : G.basis) {
        bool ok = true;
        for (const auto& [m, c] : g.terms())
            for (std::size_t i = 0; i < n; ++i)
                if (!kept[i] && m[i]) ok = false;
        if (ok) out.push_back(g);
    }
    return Ideal<K>(I.ring, std::move(out));
}

/// Checks the defining property: all S-polynomials and all generators
/// reduce to zero. A pair (i,j) is skipped when some lm_k divides lcm_ij
/// with lcm_ik and lcm_kj both proper divisors of it; its syzygy then
/// comes from pairs of strictly smaller lcm, so the check stays complete.
template <class K>
bool check_groebner(const GroebnerBasis<K>& G, const std::vector<MPoly<K>>& generators) {
    using F = typename gb::FieldFor<K>::type;
    F field;
    gb::Engine<F> eng(field, G.order);
    auto id = [](const K& c) { return c; };
    std::vector<gb::EPoly<K>> polys;
    for (const auto& g : G.basis) {
        polys.push_back(gb::to_engine<F>(g, eng.keyer(), id));
        eng.make_monic(polys.back());
    }
    std::vector<const gb::EPoly<K>*> ptrs;
    for (const auto& p : polys) ptrs.push_back(&p);
    for (const auto& f : generators)
        if (!eng.reduce(gb::to_engine<F>(f, eng.keyer(), id), ptrs).empty()) return false;
    const auto& k = eng.keyer();
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            const auto& a = polys[i];
            const auto& b = polys[j];
            if (gb::coprime(a.lm(), b.lm())) continue;
            const auto l = k.lcm(a.lm(), b.lm());
            bool chained = false;
            for (std::size_t h = 0; h < polys.size() && !chained; ++h) {
                if (h == i || h == j || !gb::divides(polys[h].lm(), l)) continue;
                chained = !(k.lcm(a.lm(), polys[h].lm()) == l) && !(k.lcm(polys[h].lm(), b.lm()) == l);
            }
            if (chained) continue;
            const auto qa = k.quotient(a.lm(), l), qb = k.quotient(b.lm(), l);
            gb::EPoly<K> s;
            std::vector<std::pair<gb::EMono, K>> t;
            for (std::size_t u = 1; u < a.size(); ++u) t.emplace_back(k.mul(qa, a.m[u]), a.c[u]);
            for (std::size_t u = 1; u < b.size(); ++u) t.emplace_back(k.mul(qb, b.m[u]), field.neg(b.c[u]));
            std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return gb::greater(x.first, y.first); });
            for (auto& [m, c] : t) {
                if (!s.m.empty() && s.m.back() == m) {
                    s.c.back() = field.add(s.c.back(), c);
                    if (field.is_zero(s.c.back())) {
                        s.m.pop_back();
                        s.c.pop_back();
                    }
                } else {
                    s.m.push_back(m);
                    s.c.push_back(c);
                }
            }
            if (!eng.reduce(s, ptrs).empty()) return false;
        }
    return true;
}

/// Hilbert data of the ideal reduced modulo p; the number-field overload
/// maps the generator to the smallest root of its modulus mod p.
/// Throws BadPrime when a coefficient denominator vanishes mod p.
HilbertData modular_mirror(const Ideal<Rat>& I, std::uint64_t p, gb::ProgressFn progress = {});
HilbertData modular_mirror(const Ideal<NFElem>& I, std::uint64_t p, gb::ProgressFn progress = {});

/// Leading monomials of the reduced grevlex basis mod p (exposed for tests).
std::vector<Monomial> modular_leading_monomials(const Ideal<Rat>& I, std::uint64_t p, const MonomialOrder& ord,
                                                gb::ProgressFn progress = {});

}  // namespace adesurf
