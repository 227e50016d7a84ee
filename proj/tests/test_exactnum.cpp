#include <random>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/exactnum/modular.hpp"
#include "adesurf/exactnum/numberfield.hpp"
#include "doctest.h"

using namespace adesurf;

namespace {

RatPoly P(std::initializer_list<int> c) {
    std::vector<Rat> v;
    for (int x : c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

RatPoly product(const std::vector<FactorPower>& fs) {
    RatPoly r = P({1});
    for (const auto& f : fs)
        for (int i = 0; i < f.multiplicity; ++i) r = r * f.factor;
    return r;
}

RatPoly random_poly(std::mt19937_64& rng, int deg) {
    std::vector<Rat> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(static_cast<int>(rng() % 21) - 10);
    v.back() = Rat(1);
    return RatPoly(std::move(v));
}

NFElem random_elem(std::mt19937_64& rng, const FieldRef& K) {
    std::vector<Rat> c;
    for (int i = 0; i < K->degree(); ++i) c.emplace_back(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 4));
    for (auto& x : c) x.canonicalize();
    return NFElem(K, c);
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(to_string(parse_rat("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rat("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_rat("1/"), SyntaxError);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(12) == P({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(8) == P({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(1) == P({-1, 1}));
    const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8, 12, 10, 22, 8};
    for (unsigned n = 1; n <= 24; ++n) CHECK(cyclotomic_polynomial(n).degree() == phi[n]);
}

TEST_CASE("number field arithmetic") {
    auto K = NumberField::cyclotomic(12);
    NFElem z = NFElem::generator(K);
    CHECK(K->degree() == 4);
    CHECK(z.pow(4) * z.pow(8) == NFElem(1));
    CHECK(z.inverse() == z.pow(11));
    CHECK(z * z.inverse() == NFElem(1));
    CHECK_THROWS_AS(NFElem::embed(K, Rat(0)).inverse(), DivisionByZero);

    auto K8 = NumberField::create(P({1, 0, 0, 0, 1}), "u");
    NFElem u = NFElem::generator(K8);
    CHECK(is_zero(u + (-u)));
    CHECK_THROWS_AS(u + z, FieldMismatch);

    CHECK(NumberField::create(P({-1, 1}))->degree() == 1);
    CHECK_THROWS_AS(NumberField::create(P({-1, 0, 1})), ReduciblePolynomial);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (auto K : {NumberField::cyclotomic(12), NumberField::cyclotomic(8)}) {
        for (int i = 0; i < 1000; ++i) {
            NFElem a = random_elem(rng, K), b = random_elem(rng, K), c = random_elem(rng, K);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!is_zero(a)) CHECK(a * a.inverse() == NFElem(1));
        }
    }
}

TEST_CASE("gcd and squarefree part") {
    CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    RatPoly f = P({-1, 1}) * P({-1, 1}) * P({2, 1});
    CHECK(gcd(f, f.derivative()) == P({-1, 1}));
    CHECK(gcd(cyclotomic_polynomial(12), cyclotomic_polynomial(8)) == P({1}));
    CHECK(gcd(RatPoly(), RatPoly()).is_zero());

    CHECK(squarefree_part(P({-1, 1}) * P({-1, 1}) * P({-1, 1})) == P({-1, 1}));
    CHECK(squarefree_part(P({1, 0, 1})) == P({1, 0, 1}));
    CHECK(squarefree_part(P({0, -1, 0, 1})) == P({0, -1, 0, 1}));
    CHECK_THROWS_AS(squarefree_part(RatPoly()), ZeroPolynomial);
}

TEST_CASE("factorization over Q") {
    auto fs = factor_rational_upoly(P({-1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == P({-1, 1}));
    CHECK(fs[1].factor == P({1, 1}));
    CHECK(factor_rational_upoly(cyclotomic_polynomial(12)).size() == 1);
    CHECK_THROWS_AS(factor_rational_upoly(RatPoly()), ZeroPolynomial);

    // x^4 + 1 is irreducible over Q but splits modulo every prime.
    CHECK(is_irreducible(P({1, 0, 0, 0, 1})));
    // Swinnerton-Dyer style product of two quadratics with awkward modular images.
    CHECK(factor_rational_upoly(P({1, 0, -10, 0, 1})).size() == 1);

    SUBCASE("oracle: the degree-16 defining polynomial is irreducible") {
        std::vector<Rat> c(17);
        c[16] = 1;
        c[12] = 3248;
        c[8] = 23100000;
        c[4] = Rat(Integer("20300000000"));
        c[0] = Rat(Integer("39062500000000"));
        RatPoly T(std::move(c));
        CHECK(is_irreducible(T));
        // no degree-1 factor modulo several primes
        int checked = 0;
        for (std::uint64_t p : {101ull, 103ull, 107ull, 109ull, 113ull}) {
            auto deg = modp::factor_degrees(T, p);
            CHECK(std::find(deg.begin(), deg.end(), 1) == deg.end());
            ++checked;
        }
        CHECK(checked == 5);
    }
}

TEST_CASE("factor products round-trip") {
    std::mt19937_64 rng(0x5EED);
    for (int trial = 0; trial < 100; ++trial) {
        RatPoly f = P({1});
        int total = 0;
        const int parts = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < parts && total < 36; ++i) {
            int d = 1 + static_cast<int>(rng() % 8);
            RatPoly g = random_poly(rng, d);
            int e = 1 + static_cast<int>(rng() % 2);
            for (int j = 0; j < e; ++j) f = f * g;
            total += d * e;
        }
        auto fs = factor_rational_upoly(f);
        CHECK(product(fs) == f.monic());
        for (const auto& fp : fs) CHECK(fp.factor.lead() == Rat(1));
    }
}

TEST_CASE("modular helpers") {
    auto ps = primes_congruent_one(12, 1000000, 3);
    REQUIRE(ps.size() == 3);
    for (auto p : ps) {
        CHECK(p > 1000000);
        CHECK(p % 12 == 1);
        CHECK(is_prime(p));
    }
    CHECK(inv_mod(3, 7) == 5);
    CHECK_THROWS_AS(inv_mod(0, 7), DivisionByZero);
    CHECK_FALSE(reduce_mod(Rat(1, 7), 7).has_value());
    CHECK(*reduce_mod(Rat(1, 2), 7) == 4);
    auto r = rational_reconstruction(Integer(4), Integer(101));
    REQUIRE(r.has_value());
    CHECK(*r * 101 != 0);
    auto roots = modp::roots(cyclotomic_polynomial(12), ps[0]);
    CHECK(roots.size() == 4);
}
