#include "adesurf/groebner/zerodim.hpp"

#include <deque>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/localsing/localsing.hpp"
#include "adesurf/mpoly/ops.hpp"

namespace adesurf {

namespace {

template <class F>
using Vec = std::vector<typename F::E>;
template <class F>
using Mat = std::vector<Vec<F>>;

// K[x]/I with the standard monomials as basis; the basis of I is mapped
// into K coefficient-wise by `conv`.
template <class F>
class Quotient {
public:
    using E = typename F::E;

    template <class Conv>
    Quotient(const GroebnerBasis<Rat>& G, const std::vector<Monomial>& basis, const F& f, Conv conv)
        : f_(f), eng_(f_, G.order), basis_(basis) {
        for (const auto& g : G.basis) polys_.push_back(gb::to_engine<F>(g, eng_.keyer(), conv));
        finish();
    }

    // `polys` must be keyed for `order`, monic and sorted by leading monomial.
    Quotient(const F& f, const MonomialOrder& order, std::vector<Monomial> basis, std::vector<gb::EPoly<E>> polys)
        : f_(f), eng_(f_, order), basis_(std::move(basis)), polys_(std::move(polys)) {
        finish();
    }

    Quotient(const Quotient&) = delete;
    Quotient& operator=(const Quotient&) = delete;

    std::size_t dim() const { return basis_.size(); }

    Vec<F> reduce_monomial(const Monomial& mono) const {
        Vec<F> v(basis_.size(), f_.zero());
        auto it = index_.find(mono);
        if (it != index_.end()) {
            v[it->second] = f_.one();
            return v;
        }
        gb::EPoly<E> e;
        e.m.push_back(eng_.keyer().make(mono));
        e.c.push_back(f_.one());
        auto r = eng_.reduce(e, ptrs_);
        for (std::size_t i = 0; i < r.size(); ++i) v[index_.at(eng_.keyer().to_monomial(r.m[i]))] = r.c[i];
        return v;
    }

    // Column j holds the coordinates of x_var * b_j.
    Mat<F> multiplication(std::size_t var) const {
        const std::size_t d = dim();
        Mat<F> m(d, Vec<F>(d, f_.zero()));
        for (std::size_t j = 0; j < d; ++j) {
            Vec<F> c = reduce_monomial(basis_[j] * Monomial::variable(var));
            for (std::size_t i = 0; i < d; ++i) m[i][j] = c[i];
        }
        return m;
    }

    Vec<F> one() const { return reduce_monomial(Monomial{}); }

private:
    void finish() {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
        for (const auto& p : polys_) ptrs_.push_back(&p);
    }

    F f_;
    gb::Engine<F> eng_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    std::vector<gb::EPoly<E>> polys_;
    std::vector<const gb::EPoly<E>*> ptrs_;
};

template <class F>
Vec<F> mat_vec(const F& f, const Mat<F>& m, const Vec<F>& v) {
    Vec<F> r(m.size(), f.zero());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (f.is_zero(v[j])) continue;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!f.is_zero(m[i][j])) r[i] = f.add(r[i], f.mul(m[i][j], v[j]));
    }
    return r;
}

// a -= s * b
template <class F>
void sub_scaled(const F& f, Vec<F>& a, const typename F::E& s, const Vec<F>& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!f.is_zero(b[i])) a[i] = f.sub(a[i], f.mul(s, b[i]));
}

// Krylov echelon: rows are combinations of w_0, w_1, ... with tracked coefficients.
template <class F>
class Krylov {
public:
    explicit Krylov(const F& f) : f_(f) {}

    // Adds w_k; returns the monic dependency (lowest coefficient first) when w_k is dependent.
    std::optional<Vec<F>> add(Vec<F> v) {
        const std::size_t k = count_++;
        Vec<F> combo(k + 1, f_.zero());
        combo[k] = f_.one();
        for (const auto& r : rows_) {
            if (f_.is_zero(v[r.pivot])) continue;
            const auto s = v[r.pivot];
            sub_scaled(f_, v, s, r.v);
            sub_scaled(f_, combo, s, r.combo);
        }
        std::size_t piv = 0;
        while (piv < v.size() && f_.is_zero(v[piv])) ++piv;
        if (piv == v.size()) return combo;
        const auto inv = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, inv);
        for (auto& x : combo) x = f_.mul(x, inv);
        rows_.push_back({std::move(v), std::move(combo), piv});
        return std::nullopt;
    }

    // Coefficients a with target = sum a_k w_k; target must lie in the span.
    Vec<F> express(Vec<F> target) const {
        Vec<F> acc(count_, f_.zero());
        for (const auto& r : rows_) {
            if (f_.is_zero(target[r.pivot])) continue;
            const auto s = target[r.pivot];
            sub_scaled(f_, target, s, r.v);
            for (std::size_t i = 0; i < r.combo.size(); ++i) acc[i] = f_.add(acc[i], f_.mul(s, r.combo[i]));
        }
        for (const auto& x : target)
            if (!f_.is_zero(x)) throw Error("vector outside the Krylov span");
        return acc;
    }

private:
    struct Row {
        Vec<F> v;
        Vec<F> combo;
        std::size_t pivot;
    };
    F f_;
    std::vector<Row> rows_;
    std::size_t count_ = 0;
};

template <class F>
Vec<F> operator_minpoly(const F& f, const Mat<F>& m, const Vec<F>& start, Krylov<F>& k) {
    Vec<F> w = start;
    for (;;) {
        if (auto dep = k.add(w)) return *dep;
        w = mat_vec(f, m, w);
    }
}

// Subspace in echelon form; reduce() maps a vector to its class.
template <class F>
class Subspace {
public:
    Subspace(const F& f, std::size_t d) : f_(f), d_(d) {}

    // Returns the new reduced row when v enlarged the span.
    const Vec<F>* insert(Vec<F> v) {
        reduce(v);
        std::size_t piv = 0;
        while (piv < d_ && f_.is_zero(v[piv])) ++piv;
        if (piv == d_) return nullptr;
        const auto inv = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, inv);
        rows_.push_back({std::move(v), piv});
        return &rows_.back().v;
    }

    void reduce(Vec<F>& v) const {
        for (const auto& r : rows_) {
            if (f_.is_zero(v[r.pivot])) continue;
            const auto s = v[r.pivot];
            sub_scaled(f_, v, s, r.v);
        }
    }

    // Coordinates outside the pivot set, i.e. a basis of the quotient space.
    std::vector<std::size_t> free_coordinates() const {
        std::vector<bool> p(d_, false);
        for (const auto& r : rows_) p[r.pivot] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < d_; ++i)
            if (!p[i]) out.push_back(i);
        return out;
    }

private:
    struct Row {
        Vec<F> v;
        std::size_t pivot;
    };
    F f_;
    std::size_t d_;
    std::deque<Row> rows_;
};

// Dense univariate helpers over F_p, lowest coefficient first, trimmed.
using PVec = std::vector<std::uint32_t>;

void trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec prem(const gb::ModField& f, PVec a, const PVec& b) {
    const auto inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        const auto s = f.mul(a.back(), inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(s, b[i]));
        trim(a);
    }
    return a;
}

PVec pquo(const gb::ModField& f, PVec a, const PVec& b) {
    PVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const auto inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        const auto s = f.mul(a.back(), inv);
        const std::size_t shift = a.size() - b.size();
        q[shift] = s;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(s, b[i]));
        trim(a);
    }
    return q;
}

PVec pgcd(const gb::ModField& f, PVec a, PVec b) {
    while (!b.empty()) {
        PVec r = prem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Squarefree part; fine for degree below p.
PVec psquarefree(const gb::ModField& f, const PVec& a) {
    PVec d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(static_cast<std::uint32_t>(i % f.p), a[i]));
    trim(d);
    if (d.empty()) return a;
    return pquo(f, a, pgcd(f, a, d));
}

template <class F>
Vec<F> horner(const F& f, const Vec<F>& s, const Mat<F>& m, const Vec<F>& start) {
    Vec<F> acc(start.size(), f.zero());
    for (std::size_t e = s.size(); e-- > 0;) {
        acc = mat_vec(f, m, acc);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], f.mul(s[e], start[i]));
    }
    return acc;
}

// Image of the reduced algebra modulo one prime.
struct ModImage {
    std::size_t quotient_dim = 0;  // an upper bound for the dimension over Q
    std::size_t radical_dim = 0;
    bool separating = false;
    PVec h;                  // minpoly of the form, monic, degree radical_dim
    std::vector<PVec> phi;   // x_v = phi_v(form), degree < radical_dim
};

ModImage image_from_quotient(const Quotient<gb::ModField>& Qr, std::size_t n, const std::vector<int>& c,
                             std::uint64_t p) {
    const gb::ModField f(p);
    const auto* Q = &Qr;
    const std::size_t d = Q->dim();
    std::vector<Mat<gb::ModField>> mult;
    for (std::size_t v = 0; v < n; ++v) mult.push_back(Q->multiplication(v));
    const auto one = Q->one();

    // Seidenberg: the squarefree parts of the coordinate eliminants generate
    // the nilradical modulo I. Its span is closed under the multiplications.
    Subspace<gb::ModField> nil(f, d);
    std::vector<Vec<gb::ModField>> frontier;
    for (std::size_t v = 0; v < n; ++v) {
        Krylov<gb::ModField> k(f);
        PVec m = operator_minpoly(f, mult[v], one, k);
        PVec s = psquarefree(f, m);
        if (s.size() == m.size()) continue;
        if (auto* row = nil.insert(horner(f, s, mult[v], one))) frontier.push_back(*row);
    }
    while (!frontier.empty()) {
        auto u = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (auto* row = nil.insert(mat_vec(f, mult[v], u))) frontier.push_back(*row);
    }
    const auto keep = nil.free_coordinates();
    const std::size_t D = keep.size();
    auto project = [&](Vec<gb::ModField> v) {
        nil.reduce(v);
        Vec<gb::ModField> r(D);
        for (std::size_t i = 0; i < D; ++i) r[i] = v[keep[i]];
        return r;
    };
    std::vector<Mat<gb::ModField>> rmult;
    Mat<gb::ModField> form(D, Vec<gb::ModField>(D, 0));
    for (std::size_t v = 0; v < n; ++v) {
        Mat<gb::ModField> m(D, Vec<gb::ModField>(D));
        for (std::size_t j = 0; j < D; ++j) {
            Vec<gb::ModField> col(d, 0);
            for (std::size_t i = 0; i < d; ++i) col[i] = mult[v][i][keep[j]];
            col = project(std::move(col));
            for (std::size_t i = 0; i < D; ++i) m[i][j] = col[i];
        }
        const std::uint32_t cv = static_cast<std::uint32_t>(*reduce_mod(Rat(c[v]), p));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) form[i][j] = f.add(form[i][j], f.mul(cv, m[i][j]));
        rmult.push_back(std::move(m));
    }
    const auto rone = project(one);

    ModImage img;
    img.quotient_dim = d;
    img.radical_dim = D;
    Krylov<gb::ModField> k(f);
    img.h = operator_minpoly(f, form, rone, k);
    if (img.h.size() != D + 1) return img;
    img.separating = true;
    for (std::size_t v = 0; v < n; ++v) {
        auto a = k.express(mat_vec(f, rmult[v], rone));
        a.resize(D);
        img.phi.push_back(std::move(a));
    }
    return img;
}

std::uint32_t rat_mod(const Rat& r, std::uint64_t p) {
    auto v = reduce_mod(r, p);
    if (!v) throw BadPrime("denominator divisible by the prime");
    return static_cast<std::uint32_t>(*v);
}

// Images from an exact basis over Q, reduced coefficient-wise.
std::optional<ModImage> image_from_basis(const GroebnerBasis<Rat>& G, const std::vector<Monomial>& basis,
                                         const std::vector<int>& c, std::uint64_t p) {
    std::optional<Quotient<gb::ModField>> Q;
    try {
        Q.emplace(G, basis, gb::ModField(p), [p](const Rat& r) { return rat_mod(r, p); });
    } catch (const BadPrime&) {
        return std::nullopt;
    }
    return image_from_quotient(*Q, G.ring->nvars(), c, p);
}

// Reduced grevlex basis of a homogeneous ideal modulo p, set to 1 in the
// last variable. By rank semicontinuity the Hilbert function modulo p
// bounds the one over Q from above in every degree, so a zero-dimensional
// reduction bounds the degree over Q and an empty reduction of I + <x_n>
// shows that Q-points avoid the last hyperplane.
struct ModChart {
    long dimension = -1;
    bool off_hyperplane = false;
    std::vector<Monomial> basis;
    std::vector<gb::EPoly<std::uint32_t>> polys;
};

std::optional<ModChart> modular_chart(const std::vector<QPoly>& gens, std::size_t n, std::uint64_t p) {
    const gb::ModField f(p);
    gb::Engine<gb::ModField> eng(f, MonomialOrder::grevlex(n));
    std::vector<gb::EPoly<std::uint32_t>> in;
    try {
        for (const auto& g : gens) {
            auto e = gb::to_engine<gb::ModField>(g, eng.keyer(), [p](const Rat& r) { return rat_mod(r, p); });
            gb::EPoly<std::uint32_t> clean;
            clean.sugar = e.sugar;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e.c[i]) {
                    clean.m.push_back(e.m[i]);
                    clean.c.push_back(e.c[i]);
                }
            if (!clean.empty()) in.push_back(std::move(clean));
        }
    } catch (const BadPrime&) {
        return std::nullopt;
    }
    ModChart out;
    if (in.empty()) {
        out.dimension = static_cast<long>(n) - 1;
        return out;
    }
    const auto G = eng.run(std::move(in));
    std::vector<Monomial> lead;
    for (const auto& g : G) lead.push_back(eng.keyer().to_monomial(g.lm()));
    out.dimension = projective_hilbert(lead, n).dimension;
    lead.push_back(Monomial::variable(n - 1));
    out.off_hyperplane = projective_hilbert(lead, n).dimension < 0;
    if (out.dimension != 0 || !out.off_hyperplane) return out;

    const gb::Keyer chart(MonomialOrder::grevlex(n - 1));
    std::vector<Monomial> chart_lead;
    for (const auto& g : G) {
        gb::EPoly<std::uint32_t> h;
        h.sugar = g.sugar;
        std::vector<std::pair<gb::EMono, std::uint32_t>> terms;
        for (std::size_t i = 0; i < g.size(); ++i) {
            Monomial m = eng.keyer().to_monomial(g.m[i]);
            m[n - 1] = 0;
            terms.emplace_back(chart.make(m), g.c[i]);
        }
        // homogeneous input: distinct terms stay distinct
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return gb::greater(a.first, b.first); });
        for (auto& [m, c] : terms) {
            h.m.push_back(m);
            h.c.push_back(c);
        }
        chart_lead.push_back(chart.to_monomial(h.lm()));
        out.polys.push_back(std::move(h));
    }
    std::sort(out.polys.begin(), out.polys.end(),
              [](const auto& a, const auto& b) { return gb::greater(b.lm(), a.lm()); });
    out.basis = standard_monomials(chart_lead, n - 1);
    return out;
}

// Chinese remaindering of a coefficient vector over growing prime sets.
class Accumulator {
public:
    void reset(std::size_t size) {
        res_.assign(size, Integer(0));
        mod_ = 1;
        primes_ = 0;
    }

    void add(const std::vector<std::uint32_t>& r, std::uint64_t p) {
        const std::uint64_t minv = inv_mod(reduce_mod(mod_, p), p);
        for (std::size_t i = 0; i < res_.size(); ++i) {
            const std::uint64_t cur = reduce_mod(res_[i], p);
            const std::uint64_t delta = mul_mod((r[i] + p - cur) % p, minv, p);
            res_[i] += mod_ * Integer(static_cast<unsigned long>(delta));
        }
        mod_ *= Integer(static_cast<unsigned long>(p));
        ++primes_;
    }

    std::optional<std::vector<Rat>> reconstruct() const {
        std::vector<Rat> out;
        out.reserve(res_.size());
        for (const auto& a : res_) {
            auto q = rational_reconstruction(a, mod_);
            if (!q) return std::nullopt;
            out.push_back(*q);
        }
        return out;
    }

    std::size_t primes() const { return primes_; }

private:
    std::vector<Integer> res_;
    Integer mod_ = 1;
    std::size_t primes_ = 0;
};

int draw(std::mt19937_64& rng) { return static_cast<int>(rng() % 19) - 9; }

// Exact check of a candidate: h squarefree, every component a common zero
// on which the form equals t, and local colengths adding up to dim Q[x]/I.
// The last condition leaves no room for further points.
std::optional<std::vector<ZeroDimComponent>> verify_candidate(const RatPoly& h, const std::vector<RatPoly>& phi,
                                                              const std::vector<int>& c,
                                                              const std::vector<QPoly>& gens, std::size_t d) {
    if (gcd(h, h.derivative()).degree() != 0) return std::nullopt;
    const RingRef ring = gens.front().ring();
    const std::size_t n = ring->nvars();
    std::vector<ZeroDimComponent> comps;
    std::size_t total = 0;
    for (const auto& fp : factor_rational_upoly(h)) {
        ZeroDimComponent comp;
        comp.field = NumberField::create(fp.factor, "t");
        NFElem form = NFElem::embed(comp.field, Rat(0));
        for (std::size_t v = 0; v < n; ++v) {
            comp.point.emplace_back(comp.field, comp.field->reduce(phi[v].coeffs()));
            form = form + NFElem(Rat(c[v])) * comp.point.back();
        }
        if (!(form == NFElem(comp.field, {Rat(0), Rat(1)}))) return std::nullopt;
        for (const auto& g : gens)
            if (!is_zero(evaluate(g, comp.point))) return std::nullopt;
        std::vector<NFPoly> images;
        for (std::size_t v = 0; v < n; ++v)
            images.push_back(NFPoly::variable(ring, v) + NFPoly::constant(ring, comp.point[v]));
        std::optional<std::size_t> colength;
        for (std::uint32_t N = 8; N <= 32 && !colength; N *= 2) {
            std::vector<NFPoly> local;
            for (const auto& g : gens) local.push_back(compose(g, images, ring, std::uint64_t{N - 1}));
            try {
                colength = localsing::local_colength(local, N);
            } catch (const JetTooShort&) {
            }
        }
        if (!colength) return std::nullopt;
        total += *colength * static_cast<std::size_t>(fp.factor.degree());
        comps.push_back(std::move(comp));
    }
    if (total != d) return std::nullopt;
    return comps;
}

inline constexpr std::size_t kMaxPrimes = 2000;

}  // namespace

RatPoly minimal_polynomial(const QPoly& a, const GroebnerBasis<Rat>& G) {
    const gb::RatField f;
    Quotient<gb::RatField> q(G, standard_monomials(G.leading, G.ring->nvars()), f, [](const Rat& r) { return r; });
    auto coords = [&](const QPoly& p) {
        Vec<gb::RatField> v(q.dim(), Rat(0));
        for (const auto& [m, c] : normal_form(p, G).terms()) {
            auto e = q.reduce_monomial(m);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * e[i];
        }
        return v;
    };
    Krylov<gb::RatField> k(f);
    QPoly power = QPoly::constant(G.ring, Rat(1));
    for (;;) {
        if (auto dep = k.add(coords(power))) return RatPoly(std::move(*dep));
        power = normal_form(power * a, G);
    }
}

namespace {

using ImageFn = std::function<std::optional<ModImage>(const std::vector<int>&, std::uint64_t)>;

// Lifts images bucketed by radical dimension and returns the first lift
// that passes the exact check.
ZeroDimSolution solve_multimodular(std::size_t n, const std::vector<QPoly>& gens, const ImageFn& image) {
    std::mt19937_64 rng(kSeed);
    for (std::size_t attempt = 1; attempt <= 16; ++attempt) {
        std::vector<int> c(n);
        do {
            for (auto& x : c) x = draw(rng);
        } while (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }));

        struct Bucket {
            Accumulator acc;
            std::size_t bound = 0;
            std::optional<std::vector<Rat>> last;
        };
        std::map<std::size_t, Bucket> buckets;
        std::size_t rejected = 0, accepted = 0;
        std::uint64_t p = (1ull << 31) - 1;
        for (std::size_t tried = 0; tried < kMaxPrimes; ++tried, --p) {
            while (!is_prime(p)) --p;
            auto img = image(c, p);
            if (!img) continue;
            if (!img->separating) {
                // a form that fails for more primes than it works for is dropped
                if (++rejected > accepted + 3) break;
                continue;
            }
            ++accepted;
            const std::size_t D = img->radical_dim;
            auto [it, fresh] = buckets.try_emplace(D);
            Bucket& b = it->second;
            if (fresh) {
                b.acc.reset(D + n * D);
                b.bound = img->quotient_dim;
            }
            b.bound = std::min(b.bound, img->quotient_dim);
            PVec flat(img->h.begin(), img->h.end() - 1);
            for (const auto& ph : img->phi) flat.insert(flat.end(), ph.begin(), ph.end());
            b.acc.add(flat, p);
            auto rec = b.acc.reconstruct();
            if (!rec) {
                b.last.reset();
                continue;
            }
            if (b.last && *b.last == *rec) {
                std::vector<Rat> hc(rec->begin(), rec->begin() + static_cast<std::ptrdiff_t>(D));
                hc.push_back(Rat(1));
                std::vector<RatPoly> phi;
                for (std::size_t v = 0; v < n; ++v) {
                    auto first = rec->begin() + static_cast<std::ptrdiff_t>(D + v * D);
                    phi.emplace_back(std::vector<Rat>(first, first + static_cast<std::ptrdiff_t>(D)));
                }
                if (auto comps = verify_candidate(RatPoly(hc), phi, c, gens, b.bound)) {
                    ZeroDimSolution sol;
                    sol.components = std::move(*comps);
                    sol.total_point_count = D;
                    sol.radical_dimension = D;
                    sol.quotient_dimension = b.bound;
                    sol.attempts = attempt;
                    sol.separating_form = c;
                    sol.primes_used = b.acc.primes();
                    return sol;
                }
            }
            b.last = std::move(rec);
        }
    }
    throw ShapePositionFailed("no verified separating linear form after 16 attempts");
}

}  // namespace

ZeroDimSolution zero_dim_points(const GroebnerBasis<Rat>& G, const std::vector<QPoly>& generators) {
    const std::size_t n = G.ring->nvars();
    if (G.is_unit()) return {};
    const auto basis = standard_monomials(G.leading, n);
    return solve_multimodular(n, generators.empty() ? G.basis : generators,
                              [&](const std::vector<int>& c, std::uint64_t p) { return image_from_basis(G, basis, c, p); });
}

ZeroDimSolution zero_dim_points(const Ideal<Rat>& I, gb::ProgressFn progress) {
    return zero_dim_points(buchberger(I, MonomialOrder::grevlex(I.ring->nvars()), std::move(progress)), I.gens);
}

GroebnerBasis<Rat> dehomogenize_last(const GroebnerBasis<Rat>& G) {
    const std::size_t n = G.ring->nvars();
    if (G.order.kind() != MonomialOrder::Kind::Grevlex || G.order.permutation() != MonomialOrder::grevlex(n).permutation())
        throw Error("dehomogenization needs the standard grevlex order");
    RingRef chart = chart_ring(n);
    std::vector<Rat> e(n, Rat(0));
    e[n - 1] = 1;
    GroebnerBasis<Rat> out{chart, MonomialOrder::grevlex(n - 1), {}, {}, G.provenance};
    for (std::size_t i = 0; i < G.basis.size(); ++i) {
        out.basis.push_back(local_chart(G.basis[i], n - 1, e));
        Monomial m = G.leading[i];
        m[n - 1] = 0;
        out.leading.push_back(m);
    }
    return out;
}

ZeroDimSolution projective_zero_dim_points(const Ideal<Rat>& I, gb::ProgressFn progress) {
    (void)progress;
    if (!I.is_homogeneous()) throw NotHomogeneous("projective points need a homogeneous ideal");
    const std::size_t n = I.ring->nvars();
    std::mt19937_64 rng(kSeed + 1);
    std::size_t positive = 0;
    for (std::size_t attempt = 0; attempt < 16; ++attempt) {
        Matrix<Rat> M = identity_matrix<Rat>(n);
        if (attempt > 0) {
            for (auto& row : M)
                for (auto& x : row) x = draw(rng);
            if (rank(M) < n) continue;
        }
        std::vector<QPoly> moved;
        for (const auto& g : I.gens) moved.push_back(attempt ? linear_change(g, M) : g);

        // Probe a few primes: an empty reduction proves emptiness over Q,
        // points on the last hyperplane ask for another change.
        std::map<std::uint64_t, ModChart> charts;
        bool usable = false, empty = false;
        std::uint64_t p = (1ull << 31) - 1;
        for (int probes = 0; probes < 3 && !usable && !empty; --p) {
            while (!is_prime(p)) --p;
            auto ch = modular_chart(moved, n, p);
            if (!ch) continue;
            ++probes;
            if (ch->dimension < 0) empty = true;
            if (ch->dimension > 0) ++positive;
            if (ch->dimension == 0 && ch->off_hyperplane) {
                usable = true;
                charts.emplace(p, std::move(*ch));
            }
        }
        if (empty) return {};
        if (positive >= 3 && !usable) throw NotZeroDimensional("positive-dimensional modulo every probed prime");
        if (!usable) continue;

        std::vector<Rat> e(n, Rat(0));
        e[n - 1] = 1;
        std::vector<QPoly> chart_gens;
        for (const auto& g : moved) chart_gens.push_back(local_chart(g, n - 1, e));
        auto image = [&](const std::vector<int>& c, std::uint64_t q) -> std::optional<ModImage> {
            auto it = charts.find(q);
            if (it == charts.end()) {
                auto ch = modular_chart(moved, n, q);
                if (!ch) return std::nullopt;
                it = charts.emplace(q, std::move(*ch)).first;
            }
            const ModChart& ch = it->second;
            if (ch.dimension != 0 || !ch.off_hyperplane) return std::nullopt;
            Quotient<gb::ModField> Q(gb::ModField(q), MonomialOrder::grevlex(n - 1), ch.basis, ch.polys);
            return image_from_quotient(Q, n - 1, c, q);
        };
        ZeroDimSolution sol = solve_multimodular(n - 1, chart_gens, image);
        for (auto& comp : sol.components) {
            std::vector<NFElem> y = comp.point;
            y.push_back(NFElem::embed(comp.field, Rat(1)));
            std::vector<NFElem> x(n, NFElem::embed(comp.field, Rat(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(M[i][j]) != 0) x[i] = x[i] + NFElem(M[i][j]) * y[j];
            std::size_t lead_idx = 0;
            while (is_zero(x[lead_idx])) ++lead_idx;
            const NFElem inv = x[lead_idx].inverse();
            for (auto& v : x) v = v * inv;
            comp.point = std::move(x);
        }
        return sol;
    }
    throw ShapePositionFailed("no admissible projective change after 16 attempts");
}

}  // namespace adesurf
