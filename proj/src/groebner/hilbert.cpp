#include "adesurf/groebner/hilbert.hpp"

#include <algorithm>

#include "adesurf/errors.hpp"

namespace adesurf {

namespace {

using Num = std::vector<Integer>;

void add_shifted(Num& acc, const Num& x, std::size_t shift) {
    if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, Integer(0));
    for (std::size_t i = 0; i < x.size(); ++i) acc[i + shift] += x[i];
}

void trim(Num& n) {
    while (!n.empty() && n.back() == 0) n.pop_back();
}

bool pairwise_coprime(const std::vector<Monomial>& g, std::size_t n) {
    for (std::size_t v = 0; v < n; ++v) {
        int seen = 0;
        for (const auto& m : g)
            if (m[v] && ++seen > 1) return false;
    }
    return true;
}

Num numerator(std::vector<Monomial> g, std::size_t n) {
    if (g.empty()) return {Integer(1)};
    for (const auto& m : g)
        if (m.degree() == 0) return {};
    if (pairwise_coprime(g, n)) {
        Num acc{Integer(1)};
        for (const auto& m : g) {
            Num next(acc.size() + m.degree(), Integer(0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                next[i + m.degree()] -= acc[i];
            }
            acc = std::move(next);
        }
        trim(acc);
        return acc;
    }
    std::size_t var = 0, best = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t cnt = 0;
        for (const auto& m : g)
            if (m[v]) ++cnt;
        if (cnt > best) {
            best = cnt;
            var = v;
        }
    }
    std::vector<std::uint32_t> ex;
    // exponents from mixed generators only; a pure power as pivot would loop
    for (const auto& m : g)
        if (m[var] && m[var] != m.degree()) ex.push_back(m[var]);
    std::sort(ex.begin(), ex.end());
    const std::uint32_t e = ex[ex.size() / 2];
    const Monomial p = Monomial::variable(var, e);

    std::vector<Monomial> plus;
    plus.reserve(g.size() + 1);
    for (const auto& m : g)
        if (!p.divides(m)) plus.push_back(m);
    plus.push_back(p);

    std::vector<Monomial> colon = g;
    for (auto& m : colon) m[var] = m[var] > e ? m[var] - e : 0;

    Num a = numerator(minimalize(std::move(plus)), n);
    Num b = numerator(minimalize(std::move(colon)), n);
    add_shifted(a, b, e);
    trim(a);
    return a;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    return numerator(minimalize(std::move(gens)), nvars);
}

KrullData krull_data(const std::vector<Monomial>& gens, std::size_t nvars) {
    Num n = hilbert_numerator(gens, nvars);
    KrullData k;
    if (n.empty()) return k;
    long r = 0;
    for (;;) {
        Integer at1 = 0;
        for (const auto& c : n) at1 += c;
        if (at1 != 0) {
            k.multiplicity = at1;
            break;
        }
        // n = (1 - t) q with q_k = n_0 + ... + n_k
        Num q(n.size() - 1);
        Integer run = 0;
        for (std::size_t i = 0; i + 1 < n.size(); ++i) {
            run += n[i];
            q[i] = run;
        }
        n = std::move(q);
        ++r;
    }
    k.krull_dimension = static_cast<long>(nvars) - r;
    return k;
}

HilbertData projective_hilbert(const std::vector<Monomial>& gens, std::size_t nvars) {
    KrullData k = krull_data(gens, nvars);
    HilbertData h;
    if (k.krull_dimension <= 0) return h;
    h.dimension = k.krull_dimension - 1;
    h.degree = k.multiplicity;
    return h;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars) {
    std::vector<std::uint32_t> bound(nvars, 0);
    for (const auto& m : gens) {
        std::size_t support = 0, var = 0;
        for (std::size_t v = 0; v < nvars; ++v)
            if (m[v]) {
                ++support;
                var = v;
            }
        if (support == 0) return {};
        if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
    }
    for (auto b : bound)
        if (b == 0) throw NotZeroDimensional("ideal is not zero-dimensional");
    std::vector<Monomial> out;
    Monomial cur;
    // depth-first over the bounding box, pruning once a generator divides
    auto in_ideal = [&](const Monomial& m) {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == nvars) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e < bound[v]; ++e) {
            cur[v] = e;
            if (in_ideal(cur)) break;  // larger exponents stay in the ideal
            rec(v + 1);
        }
        cur[v] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); });
    return out;
}

}  // namespace adesurf
