#include "adesurf/exactnum/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "adesurf/exactnum/modular.hpp"

namespace adesurf {

// ---------------------------------------------------------------------------
// F_p[x] arithmetic
// ---------------------------------------------------------------------------

namespace modp {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

void divrem(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
    r = a;
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    std::uint64_t inv = inv_mod(b.back(), p);
    for (std::size_t i = r.size() - b.size() + 1; i-- > 0;) {
        std::uint64_t c = r[i + b.size() - 1] * inv % p;
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + (p - c) * b[j]) % p;
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q, r;
    divrem(a, b, p, q, r);
    return r;
}

Poly quo(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q, r;
    divrem(a, b, p, q, r);
    return q;
}

Poly monic(Poly a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    trim(r);
    return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) { return rem(mul(a, b, p), m, p); }

Poly powmod(Poly base, const Integer& e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    base = rem(base, m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m, p);
    }
    return result;
}

bool less_poly(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

void equal_degree_split(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (static_cast<int>(f.size()) - 1 == d) {
        out.push_back(f);
        return;
    }
    Integer q = Integer(static_cast<unsigned long>(p));
    mpz_pow_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    Integer e = (q - 1) / 2;
    const std::size_t n = f.size() - 1;
    for (;;) {
        Poly a(n);
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (a.size() < 2) continue;
        Poly b = powmod(a, e, f, p);
        b = sub(b, Poly{1}, p);
        Poly g = gcd(f, b, p);
        if (g.size() > 1 && g.size() < f.size()) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(monic(quo(f, g, p), p), d, p, rng, out);
            return;
        }
    }
}

Poly from_rat(const RatPoly& f, std::uint64_t p) {
    Poly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto v = reduce_mod(f[i], p);
        if (!v) throw BadPrime("prime divides a coefficient denominator");
        r[i] = *v;
    }
    trim(r);
    return r;
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f_in, std::uint64_t p) {
    std::vector<Poly> out;
    Poly f = monic(f_in, p);
    if (f.size() <= 1) return out;
    std::mt19937_64 rng(0x5EED);
    Poly h{0, 1};
    const Poly x{0, 1};
    const Integer pz(static_cast<unsigned long>(p));
    for (int d = 1; static_cast<int>(f.size()) - 1 >= 2 * d; ++d) {
        h = powmod(h, pz, f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (g.size() > 1) {
            equal_degree_split(g, d, p, rng, out);
            f = monic(quo(f, g, p), p);
            h = rem(h, f, p);
        }
    }
    if (f.size() > 1) out.push_back(f);
    std::sort(out.begin(), out.end(), less_poly);
    return out;
}

std::vector<std::uint64_t> roots(const RatPoly& f, std::uint64_t p) {
    Poly fp = from_rat(f, p);
    if (fp.empty()) throw ZeroPolynomial("polynomial vanishes modulo p");
    // Restrict to the product of the distinct linear factors: gcd(f, x^p - x).
    Poly xp = powmod(Poly{0, 1}, Integer(static_cast<unsigned long>(p)), monic(fp, p), p);
    Poly g = gcd(fp, sub(xp, Poly{0, 1}, p), p);
    std::vector<std::uint64_t> out;
    if (g.size() <= 1) return out;
    std::vector<Poly> lin;
    if (g.size() == 2) {
        lin.push_back(g);
    } else {
        std::mt19937_64 rng(0x5EED);
        equal_degree_split(g, 1, p, rng, lin);
    }
    for (const auto& l : lin) out.push_back((p - l[0]) % p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> factor_degrees(const RatPoly& f, std::uint64_t p) {
    Poly fp;
    try {
        fp = from_rat(f, p);
    } catch (const BadPrime&) {
        return {};
    }
    if (static_cast<int>(fp.size()) - 1 != f.degree()) return {};
    if (gcd(fp, derivative(fp, p), p).size() != 1) return {};
    std::vector<int> out;
    for (const auto& g : factor_squarefree(fp, p)) out.push_back(static_cast<int>(g.size()) - 1);
    return out;
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Integer polynomials and Zassenhaus
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    return r;
}

void zmod_sym(ZPoly& a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
}

void zmod_pos(ZPoly& a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
}

Integer content(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(ZPoly a) {
    Integer g = content(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

/// Exact division over Z; returns false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    if (a.size() < b.size()) return a.empty();
    ZPoly r = a;
    q.assign(a.size() - b.size() + 1, Integer(0));
    for (std::size_t i = a.size() - b.size() + 1; i-- > 0;) {
        Integer& top = r[i + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[i + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        q[i] = c;
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (r[i] != 0) return false;
    ztrim(q);
    return true;
}

ZPoly to_zpoly(const RatPoly& f) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    for (const auto& c : f.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
    return primitive(z);
}

RatPoly to_monic_rat(const ZPoly& z) {
    std::vector<Rat> v;
    for (const auto& c : z) v.emplace_back(c, z.back());
    for (auto& c : v) c.canonicalize();
    return RatPoly(std::move(v));
}

modp::Poly zreduce(const ZPoly& a, std::uint64_t p) {
    modp::Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce_mod(a[i], p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly lift_to_z(const modp::Poly& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

/// Lifts monic factors f_i with F = lc * prod f_i (mod p) to modulus p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<modp::Poly>& factors, std::uint64_t p, unsigned k) {
    const std::size_t r = factors.size();
    std::vector<ZPoly> lifted;
    for (const auto& f : factors) lifted.push_back(lift_to_z(f));
    if (r == 1) {
        // F / lc is the single monic factor; lift directly.
        Integer m;
        mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), k);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), m.get_mpz_t());
        ZPoly g = F;
        for (auto& c : g) c *= inv;
        zmod_pos(g, m);
        return {g};
    }
    // Partial fraction coefficients: sum s_i * prod_{j != i} f_j = 1 (mod p).
    std::vector<modp::Poly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        modp::Poly prod{1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = modp::rem(modp::mul(prod, factors[j], p), factors[i], p);
        // Inverse of prod modulo f_i via extended Euclid.
        modp::Poly a = factors[i], b = prod, u0{}, u1{1};
        while (!b.empty()) {
            modp::Poly q, rr;
            modp::divrem(a, b, p, q, rr);
            modp::Poly u2 = modp::sub(u0, modp::mul(q, u1, p), p);
            a = std::move(b);
            b = std::move(rr);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        std::uint64_t inv = inv_mod(a[0], p);
        for (auto& c : u0) c = c * inv % p;
        s[i] = u0;
    }
    const std::uint64_t lc_inv = inv_mod(reduce_mod(F.back(), p), p);
    Integer pj(static_cast<unsigned long>(p));
    const Integer pz(static_cast<unsigned long>(p));
    for (unsigned j = 1; j < k; ++j) {
        ZPoly prod{F.back()};
        for (const auto& f : lifted) prod = zmul(prod, f);
        ZPoly err(std::max(F.size(), prod.size()), Integer(0));
        for (std::size_t i = 0; i < F.size(); ++i) err[i] += F[i];
        for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
        ztrim(err);
        for (auto& c : err) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        modp::Poly e = zreduce(err, p);
        if (!e.empty()) {
            for (auto& c : e) c = c * lc_inv % p;
            for (std::size_t i = 0; i < r; ++i) {
                modp::Poly delta = modp::rem(modp::mul(e, s[i], p), factors[i], p);
                ZPoly dz = lift_to_z(delta);
                for (std::size_t t = 0; t < dz.size(); ++t) lifted[i][t] += dz[t] * pj;
            }
        }
        pj *= pz;
    }
    return lifted;
}

Integer factor_bound(const ZPoly& F) {
    // Mignotte: coefficients of any factor of F are at most 2^n * ||F||_2.
    Integer norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Integer b = root;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(F.size()));
    return b * abs(F.back());
}

void subsets_of_size(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
    if (stop) return;
    if (cur.size() == k) {
        stop = visit(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n && !stop; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, i + 1, cur, visit, stop);
        cur.pop_back();
    }
}

std::vector<ZPoly> zassenhaus(const ZPoly& F_in) {
    const int n = static_cast<int>(F_in.size()) - 1;
    if (n <= 1) return {F_in};
    // Choose the prime.
    std::uint64_t best_p = 0;
    std::vector<modp::Poly> best;
    int good = 0;
    for (std::uint64_t p = 101; good < 5; ++p) {
        if (!is_prime(p)) continue;
        if (reduce_mod(F_in.back(), p) == 0) continue;
        modp::Poly fp = zreduce(F_in, p);
        if (modp::gcd(fp, modp::derivative(fp, p), p).size() != 1) continue;
        ++good;
        auto fac = modp::factor_squarefree(fp, p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {F_in};
    const std::uint64_t p = best_p;
    Integer bound = 2 * factor_bound(F_in) + 1;
    unsigned k = 1;
    Integer m(static_cast<unsigned long>(p));
    while (m <= bound) {
        m *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift(F_in, best, p, k);

    std::vector<ZPoly> result;
    ZPoly F = F_in;
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    std::size_t size = 1;
    while (2 * size <= alive.size()) {
        bool found = false;
        std::vector<std::size_t> cur;
        bool stop = false;
        subsets_of_size(alive.size(), size, 0, cur, [&](const std::vector<std::size_t>& sub) {
            // Constant-term screen before the full product.
            Integer c0 = F.back();
            for (auto idx : sub) c0 *= lifted[alive[idx]][0];
            mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), m.get_mpz_t());
            if (c0 > m / 2) c0 -= m;
            if (c0 == 0 ? F[0] != 0 : !mpz_divisible_p(Integer(F.back() * F[0]).get_mpz_t(), c0.get_mpz_t()))
                return false;
            ZPoly g{F.back()};
            for (auto idx : sub) {
                g = zmul(g, lifted[alive[idx]]);
                zmod_sym(g, m);
            }
            g = primitive(g);
            ZPoly q;
            if (!zdivides(F, g, q)) return false;
            result.push_back(g);
            F = q;
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < alive.size(); ++i)
                if (std::find(sub.begin(), sub.end(), i) == sub.end()) rest.push_back(alive[i]);
            alive = std::move(rest);
            found = true;
            return true;
        }, stop);
        if (!found) ++size;
    }
    result.push_back(primitive(F));
    return result;
}

bool rat_poly_less(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
            return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
    }
    return false;
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
    std::vector<FactorPower> out;
    if (f.degree() == 0) return out;
    RatPoly df = f.derivative();
    RatPoly b = gcd(f, df);
    RatPoly c = (f / b).monic();
    RatPoly d = (df / b) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        RatPoly a = gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = c / a;
        d = (d / a) - c.derivative();
    }
    return out;
}

std::vector<FactorPower> factor_rational_upoly(const RatPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("factorization of the zero polynomial");
    std::vector<FactorPower> out;
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& z : zassenhaus(to_zpoly(part.factor))) out.push_back({to_monic_rat(z), part.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return rat_poly_less(a.factor, b.factor);
    });
    return out;
}

bool is_irreducible(const RatPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_rational_upoly(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

RatPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error("cyclotomic_polynomial requires n >= 1");
    // x^n - 1 = prod_{d | n} Phi_d, so divide out the proper divisors.
    RatPoly num = RatPoly::monomial(Rat(1), n) - RatPoly::constant(Rat(1));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = num / cyclotomic_polynomial(d);
    return num;
}

}  // namespace adesurf
