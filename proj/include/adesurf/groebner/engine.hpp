#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "adesurf/errors.hpp"
#include "adesurf/mpoly/monomial.hpp"
#include "adesurf/mpoly/order.hpp"

namespace adesurf::gb {

/// Engine monomial: 16-bit exponents plus a precomputed order key (compared
/// as a big-endian 192-bit integer) and a short divisibility mask.
struct EMono {
    std::array<std::uint64_t, 3> key{};
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
    std::uint64_t mask = 0;

    friend bool operator==(const EMono& a, const EMono& b) { return a.key == b.key && a.e == b.e; }
};

inline bool greater(const EMono& a, const EMono& b) {
    if (a.key[0] != b.key[0]) return a.key[0] > b.key[0];
    if (a.key[1] != b.key[1]) return a.key[1] > b.key[1];
    return a.key[2] > b.key[2];
}

inline bool divides(const EMono& a, const EMono& b) {
    if (a.mask & ~b.mask) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline bool coprime(const EMono& a, const EMono& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

/// Builds order keys for one MonomialOrder.
class Keyer {
public:
    explicit Keyer(const MonomialOrder& ord) : ord_(ord), n_(ord.nvars()) {
        if (n_ > kMaxVars) throw Error("too many variables for the engine");
    }

    const MonomialOrder& order() const { return ord_; }
    std::size_t nvars() const { return n_; }

    void finish(EMono& m) const {
        std::uint32_t d = 0;
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            d += m.e[i];
            const std::uint32_t capped = m.e[i] < 8 ? m.e[i] : 8;
            mask |= ((1ull << capped) - 1) << (8 * i);
        }
        if (d > 0xFFFF) throw ExponentOverflow("total degree exceeds 16 bits");
        m.deg = d;
        m.mask = mask;
        m.key = {0, 0, 0};
        std::size_t slot = 0;
        auto put = [&](std::uint64_t v) {
            m.key[slot / 4] |= v << (16 * (3 - slot % 4));
            ++slot;
        };
        const auto& perm = ord_.permutation();
        switch (ord_.kind()) {
            case MonomialOrder::Kind::Grevlex:
                put(d);
                for (std::size_t i = n_; i-- > 0;) put(0xFFFFu - m.e[perm[i]]);
                break;
            case MonomialOrder::Kind::Lex:
                for (std::size_t i = 0; i < n_; ++i) put(m.e[perm[i]]);
                break;
            case MonomialOrder::Kind::BlockElimination: {
                const std::size_t b = ord_.block();
                std::uint32_t d1 = 0;
                for (std::size_t i = 0; i < b; ++i) d1 += m.e[perm[i]];
                put(d1);
                for (std::size_t i = b; i-- > 0;) put(0xFFFFu - m.e[perm[i]]);
                put(d - d1);
                for (std::size_t i = n_; i-- > b;) put(0xFFFFu - m.e[perm[i]]);
                break;
            }
            case MonomialOrder::Kind::LocalNegGrevlex:
                put(0xFFFFu - d);
                for (std::size_t i = n_; i-- > 0;) put(0xFFFFu - m.e[perm[i]]);
                break;
        }
    }

    EMono make(const Monomial& m) const {
        EMono r;
        for (std::size_t i = 0; i < n_; ++i) {
            if (m[i] > 0xFFFF) throw ExponentOverflow("exponent exceeds 16 bits");
            r.e[i] = static_cast<std::uint16_t>(m[i]);
        }
        finish(r);
        return r;
    }

    Monomial to_monomial(const EMono& m) const {
        Monomial r;
        for (std::size_t i = 0; i < n_; ++i) r[i] = m.e[i];
        return r;
    }

    EMono mul(const EMono& a, const EMono& b) const {
        EMono r;
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint32_t s = static_cast<std::uint32_t>(a.e[i]) + b.e[i];
            if (s > 0xFFFF) throw ExponentOverflow("exponent exceeds 16 bits");
            r.e[i] = static_cast<std::uint16_t>(s);
        }
        finish(r);
        return r;
    }

    /// b / a, assuming a | b.
    EMono quotient(const EMono& a, const EMono& b) const {
        EMono r;
        for (std::size_t i = 0; i < n_; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
        finish(r);
        return r;
    }

    EMono lcm(const EMono& a, const EMono& b) const {
        EMono r;
        for (std::size_t i = 0; i < n_; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        finish(r);
        return r;
    }

private:
    MonomialOrder ord_;
    std::size_t n_;
};

template <class E>
struct EPoly {
    std::vector<EMono> m;
    std::vector<E> c;
    std::uint32_t sugar = 0;

    std::size_t size() const { return m.size(); }
    bool empty() const { return m.empty(); }
    const EMono& lm() const { return m.front(); }
};

/// Sum of sorted polynomials kept in buckets of geometrically growing size.
template <class F>
class GeoBucket {
public:
    using E = typename F::E;
    explicit GeoBucket(const F& f) : f_(f) {}

    void add(std::vector<EMono>&& m, std::vector<E>&& c) {
        if (m.empty()) return;
        std::size_t lvl = level_for(m.size());
        for (;;) {
            if (lvl >= b_.size()) b_.resize(lvl + 1);
            Bucket& bk = b_[lvl];
            if (bk.len() == 0) {
                bk.m = std::move(m);
                bk.c = std::move(c);
                bk.pos = 0;
            } else {
                merge(bk, m, c);
            }
            if (bk.len() <= capacity(lvl)) return;
            // promote
            m.assign(bk.m.begin() + static_cast<std::ptrdiff_t>(bk.pos), bk.m.end());
            c.assign(std::make_move_iterator(bk.c.begin() + static_cast<std::ptrdiff_t>(bk.pos)),
                     std::make_move_iterator(bk.c.end()));
            bk.m.clear();
            bk.c.clear();
            bk.pos = 0;
            ++lvl;
        }
    }

    /// Removes and returns the leading term; false once the sum is zero.
    bool pop_lead(EMono& mono, E& coeff) {
        for (;;) {
            int best = -1;
            for (std::size_t i = 0; i < b_.size(); ++i) {
                if (b_[i].len() == 0) continue;
                if (best < 0 || greater(b_[i].head(), b_[static_cast<std::size_t>(best)].head())) best = static_cast<int>(i);
            }
            if (best < 0) return false;
            mono = b_[static_cast<std::size_t>(best)].head();
            coeff = std::move(b_[static_cast<std::size_t>(best)].c[b_[static_cast<std::size_t>(best)].pos]);
            ++b_[static_cast<std::size_t>(best)].pos;
            for (std::size_t i = 0; i < b_.size(); ++i) {
                if (static_cast<int>(i) == best || b_[i].len() == 0) continue;
                if (b_[i].head() == mono) {
                    coeff = f_.add(coeff, b_[i].c[b_[i].pos]);
                    ++b_[i].pos;
                }
            }
            if (!f_.is_zero(coeff)) return true;
        }
    }

private:
    struct Bucket {
        std::vector<EMono> m;
        std::vector<E> c;
        std::size_t pos = 0;
        std::size_t len() const { return m.size() - pos; }
        const EMono& head() const { return m[pos]; }
    };

    static std::size_t capacity(std::size_t lvl) { return std::size_t{4} << (2 * lvl); }
    static std::size_t level_for(std::size_t n) {
        std::size_t l = 0;
        while (capacity(l) < n) ++l;
        return l;
    }

    void merge(Bucket& bk, std::vector<EMono>& m, std::vector<E>& c) {
        std::vector<EMono> rm;
        std::vector<E> rc;
        rm.reserve(bk.len() + m.size());
        rc.reserve(bk.len() + m.size());
        std::size_t i = bk.pos, j = 0;
        while (i < bk.m.size() && j < m.size()) {
            if (greater(bk.m[i], m[j])) {
                rm.push_back(bk.m[i]);
                rc.push_back(std::move(bk.c[i]));
                ++i;
            } else if (greater(m[j], bk.m[i])) {
                rm.push_back(m[j]);
                rc.push_back(std::move(c[j]));
                ++j;
            } else {
                E s = f_.add(bk.c[i], c[j]);
                if (!f_.is_zero(s)) {
                    rm.push_back(m[j]);
                    rc.push_back(std::move(s));
                }
                ++i;
                ++j;
            }
        }
        for (; i < bk.m.size(); ++i) {
            rm.push_back(bk.m[i]);
            rc.push_back(std::move(bk.c[i]));
        }
        for (; j < m.size(); ++j) {
            rm.push_back(m[j]);
            rc.push_back(std::move(c[j]));
        }
        bk.m = std::move(rm);
        bk.c = std::move(rc);
        bk.pos = 0;
    }

    const F& f_;
    std::vector<Bucket> b_;
};

struct EngineStats {
    std::size_t pairs_total = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t basis_size = 0;
    std::size_t pairs_pending = 0;
    std::uint32_t current_sugar = 0;
};

using ProgressFn = std::function<void(const EngineStats&)>;

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// sugar selection strategy. Works for any global order.
template <class F>
class Engine {
public:
    using E = typename F::E;
    using Poly = EPoly<E>;

    Engine(const F& f, const MonomialOrder& ord) : f_(f), k_(ord) {
        if (!ord.is_global()) throw Error("Buchberger needs a global order");
    }

    const Keyer& keyer() const { return k_; }
    const F& field() const { return f_; }

    void set_progress(ProgressFn fn, std::size_t every = 200) {
        progress_ = std::move(fn);
        every_ = every ? every : 1;
    }
    const EngineStats& stats() const { return stats_; }

    void make_monic(Poly& p) const {
        if (p.empty() || f_.is_one(p.c[0])) return;
        const E inv = f_.inv(p.c[0]);
        for (auto& x : p.c) x = f_.mul(x, inv);
    }

    /// Normal form of p modulo the polynomials in `basis` (monic, sorted).
    /// With `full` false only the head is reduced.
    Poly reduce(const Poly& p, const std::vector<const Poly*>& basis, bool full = true) const {
        Poly out;
        out.sugar = p.sugar;
        if (p.empty()) return out;
        GeoBucket<F> bucket(f_);
        {
            auto m = p.m;
            auto c = p.c;
            bucket.add(std::move(m), std::move(c));
        }
        EMono mono;
        E coeff = f_.zero();
        while (bucket.pop_lead(mono, coeff)) {
            const Poly* red = find_reducer(mono, basis);
            if (!red) {
                out.m.push_back(mono);
                out.c.push_back(std::move(coeff));
                if (!full) {
                    // copy the remainder verbatim
                    while (bucket.pop_lead(mono, coeff)) {
                        out.m.push_back(mono);
                        out.c.push_back(std::move(coeff));
                    }
                    break;
                }
                continue;
            }
            const EMono q = k_.quotient(red->lm(), mono);
            const E s = f_.neg(coeff);
            std::vector<EMono> tm;
            std::vector<E> tc;
            tm.reserve(red->size() - 1);
            tc.reserve(red->size() - 1);
            for (std::size_t j = 1; j < red->size(); ++j) {
                tm.push_back(k_.mul(q, red->m[j]));
                tc.push_back(f_.mul(s, red->c[j]));
            }
            out.sugar = std::max(out.sugar, red->sugar + q.deg);
            bucket.add(std::move(tm), std::move(tc));
        }
        return out;
    }

    /// Reduced Groebner basis of the given generators.
    std::vector<Poly> run(std::vector<Poly> gens) {
        polys_.clear();
        pairs_.clear();
        active_.clear();
        stats_ = {};
        std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
            if (a.empty() != b.empty()) return b.empty();
            if (a.empty()) return false;
            return greater(b.lm(), a.lm());
        });
        for (auto& g : gens) {
            if (g.empty()) continue;
            Poly h = reduce(g, active_basis());
            if (h.empty()) continue;
            make_monic(h);
            update(std::move(h));
        }
        while (true) {
            std::uint32_t best = UINT32_MAX;
            for (const auto& pr : pairs_)
                if (!pr.dead) best = std::min(best, pr.sugar);
            if (best == UINT32_MAX) break;
            std::vector<std::size_t> batch;
            for (std::size_t i = 0; i < pairs_.size(); ++i)
                if (!pairs_[i].dead && pairs_[i].sugar == best) batch.push_back(i);
            std::sort(batch.begin(), batch.end(), [&](std::size_t a, std::size_t b) {
                const auto& pa = pairs_[a];
                const auto& pb = pairs_[b];
                if (!(pa.lcm == pb.lcm)) return greater(pb.lcm, pa.lcm);
                if (pa.i != pb.i) return pa.i < pb.i;
                return pa.j < pb.j;
            });
            stats_.current_sugar = best;
            for (std::size_t idx : batch) {
                if (pairs_[idx].dead) continue;
                pairs_[idx].dead = true;
                const std::size_t i = pairs_[idx].i, j = pairs_[idx].j;
                Poly s = spoly(polys_[i], polys_[j]);
                Poly h = reduce(s, active_basis());
                ++stats_.pairs_reduced;
                if (h.empty()) {
                    ++stats_.zero_reductions;
                } else {
                    make_monic(h);
                    update(std::move(h));
                }
                report();
            }
            pairs_.erase(std::remove_if(pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.dead; }),
                         pairs_.end());
        }
        return reduced_basis();
    }

private:
    struct Pair {
        std::size_t i, j;
        EMono lcm;
        std::uint32_t sugar;
        bool dead = false;
    };

    const Poly* find_reducer(const EMono& m, const std::vector<const Poly*>& basis) const {
        const Poly* best = nullptr;
        for (const Poly* g : basis) {
            if (!divides(g->lm(), m)) continue;
            if (!best || g->size() < best->size()) best = g;
        }
        return best;
    }

    std::vector<const Poly*> active_basis() const {
        std::vector<const Poly*> v;
        v.reserve(active_.size());
        for (std::size_t i : active_) v.push_back(&polys_[i]);
        return v;
    }

    Poly spoly(const Poly& a, const Poly& b) const {
        const EMono l = k_.lcm(a.lm(), b.lm());
        const EMono qa = k_.quotient(a.lm(), l), qb = k_.quotient(b.lm(), l);
        Poly s;
        s.sugar = std::max(a.sugar + qa.deg, b.sugar + qb.deg);
        GeoBucket<F> bucket(f_);
        std::vector<EMono> m;
        std::vector<E> c;
        for (std::size_t t = 1; t < a.size(); ++t) {
            m.push_back(k_.mul(qa, a.m[t]));
            c.push_back(a.c[t]);
        }
        bucket.add(std::move(m), std::move(c));
        m.clear();
        c.clear();
        for (std::size_t t = 1; t < b.size(); ++t) {
            m.push_back(k_.mul(qb, b.m[t]));
            c.push_back(f_.neg(b.c[t]));
        }
        bucket.add(std::move(m), std::move(c));
        EMono mono;
        E coeff = f_.zero();
        while (bucket.pop_lead(mono, coeff)) {
            s.m.push_back(mono);
            s.c.push_back(std::move(coeff));
        }
        return s;
    }

    // Gebauer-Moeller installation of a new basis element.
    void update(Poly h) {
        const std::size_t hi = polys_.size();
        const EMono hl = h.lm();
        polys_.push_back(std::move(h));
        const Poly& hp = polys_.back();

        struct Cand {
            std::size_t g;
            EMono lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> cands;
        cands.reserve(active_.size());
        for (std::size_t g : active_) {
            const EMono& gl = polys_[g].lm();
            cands.push_back({g, k_.lcm(hl, gl), coprime(hl, gl)});
        }
        // Chain criterion among the new pairs: drop (h,g1) when some other
        // (h,g2) has lcm properly dividing it; among equal lcms keep one,
        // preferring a coprime representative.
        for (std::size_t a = 0; a < cands.size(); ++a) {
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !cands[b].keep) continue;
                if (!divides(cands[b].lcm, cands[a].lcm)) continue;
                if (!(cands[b].lcm == cands[a].lcm)) {
                    cands[a].keep = false;
                    break;
                }
                // equal lcm: keep the coprime one, else the lower index
                if (cands[b].coprime && !cands[a].coprime) {
                    cands[a].keep = false;
                    break;
                }
                if (cands[b].coprime == cands[a].coprime && b < a) {
                    cands[a].keep = false;
                    break;
                }
            }
        }
        // Old pairs made redundant by h.
        for (auto& pr : pairs_) {
            if (pr.dead) continue;
            if (!divides(hl, pr.lcm)) continue;
            const EMono l1 = k_.lcm(polys_[pr.i].lm(), hl), l2 = k_.lcm(polys_[pr.j].lm(), hl);
            if (!(l1 == pr.lcm) && !(l2 == pr.lcm)) pr.dead = true;
        }
        for (const auto& c : cands) {
            ++stats_.pairs_total;
            if (!c.keep || c.coprime) continue;
            const Poly& gp = polys_[c.g];
            const std::uint32_t sug = std::max(hp.sugar + c.lcm.deg - hl.deg, gp.sugar + c.lcm.deg - gp.lm().deg);
            pairs_.push_back({c.g, hi, c.lcm, sug});
        }
        std::vector<std::size_t> next;
        for (std::size_t g : active_)
            if (!divides(hl, polys_[g].lm())) next.push_back(g);
        next.push_back(hi);
        active_ = std::move(next);
        stats_.basis_size = active_.size();
    }

    std::vector<Poly> reduced_basis() const {
        std::vector<Poly> min;
        for (std::size_t i : active_) min.push_back(polys_[i]);
        std::sort(min.begin(), min.end(), [](const Poly& a, const Poly& b) { return greater(b.lm(), a.lm()); });
        std::vector<Poly> out;
        for (std::size_t i = 0; i < min.size(); ++i) {
            std::vector<const Poly*> others;
            for (std::size_t j = 0; j < min.size(); ++j)
                if (j != i) others.push_back(&min[j]);
            // leading term is irreducible by the others (minimal basis)
            Poly tail;
            tail.m.assign(min[i].m.begin() + 1, min[i].m.end());
            tail.c.assign(min[i].c.begin() + 1, min[i].c.end());
            Poly r = reduce(tail, others);
            Poly g;
            g.sugar = min[i].sugar;
            g.m.push_back(min[i].lm());
            g.c.push_back(min[i].c[0]);
            g.m.insert(g.m.end(), r.m.begin(), r.m.end());
            g.c.insert(g.c.end(), r.c.begin(), r.c.end());
            out.push_back(std::move(g));
        }
        return out;
    }

    void report() {
        if (!progress_ || stats_.pairs_reduced % every_ != 0) return;
        stats_.pairs_pending = 0;
        for (const auto& p : pairs_)
            if (!p.dead) ++stats_.pairs_pending;
        progress_(stats_);
    }

    const F& f_;
    Keyer k_;
    std::vector<Poly> polys_;
    std::vector<Pair> pairs_;
    std::vector<std::size_t> active_;
    EngineStats stats_;
    ProgressFn progress_;
    std::size_t every_ = 200;
};

}  // namespace adesurf::gb
