#include <random>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/localsing/arnold.hpp"
#include "adesurf/localsing/localsing.hpp"
#include "adesurf/mpoly/text.hpp"
#include "doctest.h"

using namespace adesurf;

namespace {

RingRef xyz() {
    static const RingRef r = make_ring({"x", "y", "z"});
    return r;
}

LocalFunction<Rat> germ(const char* text) { return LocalFunction<Rat>(parse_poly(text, xyz())); }

std::vector<Monomial> lead(std::initializer_list<const char*> gens, const RingRef& R) {
    std::vector<QPoly> g;
    for (auto s : gens) g.push_back(parse_poly(s, R));
    return minimalize(mora_standard_basis(g).leading);
}

std::vector<localsing::ArnoldCase> arnold() { return localsing::arnold_normal_forms(); }

Matrix<Rat> random_invertible(std::mt19937_64& rng) {
    for (;;) {
        Matrix<Rat> M(3, std::vector<Rat>(3));
        for (auto& row : M)
            for (auto& x : row) x = Rat(static_cast<long>(rng() % 7) - 3);
        if (rank(M) == 3) return M;
    }
}

}  // namespace

TEST_CASE("standard bases for the local order") {
    auto R = make_ring({"x", "y"});
    auto l1 = lead({"x"}, R);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0] == Monomial::variable(0));
    auto l2 = lead({"x + x^2", "y"}, R);
    CHECK(l2.size() == 2);
    CHECK(staircase_size(l2, 2, std::nullopt) == std::optional<std::size_t>(1));
    std::vector<QPoly> jac;
    for (const auto& d : gradient(parse_poly("x^3 - x*y^2 + z^2", xyz()))) jac.push_back(d);
    auto sb = mora_standard_basis(jac);
    CHECK(staircase_size(sb.leading, 3, std::nullopt) == std::optional<std::size_t>(4));
    // a unit generates the whole local ring
    auto u = lead({"1 + x", "y^5"}, R);
    CHECK(staircase_size(u, 2, std::nullopt) == std::optional<std::size_t>(0));
}

TEST_CASE("milnor and tjurina numbers") {
    CHECK(milnor_number(germ("x^2 + y^2 + z^2")) == std::optional<std::size_t>(1));
    CHECK(milnor_number(germ("x^3 - x*y^2 + z^2")) == std::optional<std::size_t>(4));
    CHECK(tjurina_number(germ("x^3 - x*y^2 + z^2")) == std::optional<std::size_t>(4));
    CHECK(tjurina_number(germ("x^3 + y^5 + z^2")) == std::optional<std::size_t>(8));
    // not quasi-homogeneous: x^5 + y^5 + x^2*y^2 has mu 11, tau 10
    auto R = make_ring({"x", "y"});
    LocalFunction<Rat> t(parse_poly("x^5 + y^5 + x^2*y^2", R));
    CHECK(milnor_number(t) == std::optional<std::size_t>(11));
    CHECK(tjurina_number(t) == std::optional<std::size_t>(10));
    CHECK_FALSE(milnor_number(germ("x^2 + y^2")).has_value());
    CHECK_FALSE(milnor_number(germ("x^2*y^2 + z^2")).has_value());
}

TEST_CASE("hessian corank") {
    CHECK(hessian_corank(germ("x^2 + y^2 + z^2")) == 0);
    CHECK(hessian_corank(germ("x^3 - x*y^2 + z^2")) == 2);
    CHECK(hessian_corank(germ("x*y + z^3")) == 1);
    CHECK(hessian_corank(germ("x^3 + y^3 + z^3")) == 3);
}

TEST_CASE("splitting residual") {
    CHECK(format_poly(splitting_residual(germ("z^2 + x^3 - x*y^2"), 3)) == "x^3 - x*y^2");
    CHECK(format_poly(splitting_residual(germ("y^2 + z^2 + x^4"), 4)) == "x^4");
    // (z + x^2)^2 - x^4 + x^5
    auto r = splitting_residual(germ("z^2 + 2*x^2*z + x^5"), 5);
    CHECK(format_poly(r) == "x^5 - x^4");
    // a hyperbolic quadratic part still splits
    auto h = splitting_residual(germ("x*y + z^3 + x*z^2"), 4);
    CHECK(h.nvars() == 1);
    CHECK_FALSE(graded_component(h, 3).is_zero());
    CHECK_THROWS_AS(splitting_residual(germ("x^3 + y^3 + z^3"), 3), CorankThree);
}

TEST_CASE("binary cubic root type") {
    auto R = make_ring({"x", "y"});
    auto rt = [&](const char* s) { return binary_cubic_root_type(parse_poly(s, R)); };
    CHECK(rt("x^2*y + y^3") == CubicRootType::ThreeDistinct);
    CHECK(rt("x^2*y") == CubicRootType::OneDouble);
    CHECK(rt("x^3") == CubicRootType::Triple);
    CHECK(rt("y^3") == CubicRootType::Triple);
    CHECK(rt("x*y^2") == CubicRootType::OneDouble);
    CHECK(rt("x^3 - x*y^2") == CubicRootType::ThreeDistinct);
    CHECK(rt("0") == CubicRootType::Zero);
}

TEST_CASE("Arnold normal forms") {
    for (const auto& c : arnold()) {
        CAPTURE(c.poly);
        auto rep = classify_ade(germ(c.poly.c_str()));
        CHECK(rep.type_name() == c.type);
        CHECK(rep.corank == c.corank);
        CHECK(rep.milnor == std::optional<std::size_t>(c.mu));
        CHECK(rep.tjurina == rep.milnor);
    }
    CHECK(classify_ade(germ("x^3 - x*y^2 + z^2")).evidence == CubicRootType::ThreeDistinct);
    CHECK(classify_ade(germ("x^3 + y^3 + z^3")).type == SingularityType::NotSimple);
    CHECK(classify_ade(germ("x^4 + y^4 + z^2")).type == SingularityType::NotSimple);
    CHECK(classify_ade(germ("x^2*y^2 + z^2")).type == SingularityType::NotIsolated);
}

TEST_CASE("invariance under linear changes") {
    std::mt19937_64 rng(0x5EED);
    for (const auto& c : arnold()) {
        const auto f = parse_poly(c.poly, xyz());
        for (int trial = 0; trial < 20; ++trial) {
            auto g = LocalFunction<Rat>(linear_change(f, random_invertible(rng)));
            CAPTURE(c.poly);
            CHECK(milnor_number(g) == std::optional<std::size_t>(c.mu));
            CHECK(tjurina_number(g) == std::optional<std::size_t>(c.mu));
            CHECK(classify_ade(g).type_name() == c.type);
        }
    }
}

TEST_CASE("scaling and high-order perturbation") {
    for (const auto& c : arnold()) {
        const auto f = parse_poly(c.poly, xyz());
        auto scaled = classify_ade(LocalFunction<Rat>(Rat(-7, 3) * f));
        CHECK(scaled.type_name() == c.type);
        const auto bump = parse_poly("x^" + std::to_string(c.mu + 2) + " + x*y*z^" + std::to_string(c.mu + 1), xyz());
        CHECK(classify_ade(LocalFunction<Rat>(f + bump)).type_name() == c.type);
    }
}

TEST_CASE("classification over a number field") {
    auto K = NumberField::create(cyclotomic_polynomial(12), "z");
    const auto zeta = NFElem::generator(K);
    auto R = xyz();
    // zeta * (x^3 - x*y^2) + (zeta^2 + 1) * z^2 is still D4
    auto f = NFPoly::monomial(R, Monomial::variable(0, 3), zeta) -
             NFPoly::monomial(R, Monomial::variable(0) * Monomial::variable(1, 2), zeta) +
             NFPoly::monomial(R, Monomial::variable(2, 2), zeta * zeta + NFElem(1));
    auto rep = classify_ade(LocalFunction<NFElem>(f));
    CHECK(rep.type_name() == "D4");
    CHECK(rep.tjurina == std::optional<std::size_t>(4));
    CHECK_THROWS(LocalFunction<NFElem>(f + NFPoly::variable(R, 0)));
}

TEST_CASE("germs known only up to a jet") {
    // the degree-9 term is invisible below degree 9 and irrelevant for D4
    auto f = parse_poly("x^3 - x*y^2 + z^2 + x^9", xyz());
    LocalFunction<Rat> lf(f, 6);
    CHECK(lf.poly() == parse_poly("x^3 - x*y^2 + z^2", xyz()));
    CHECK(milnor_number(lf) == std::optional<std::size_t>(4));
    CHECK(classify_ade(lf).type_name() == "D4");
    // A6 needs more than a 4-jet
    LocalFunction<Rat> shortjet(parse_poly("x^7 + y^2 + z^2", xyz()), 5);
    CHECK_THROWS_AS(milnor_number(shortjet), JetTooShort);
    auto rep = classify_ade(shortjet);
    CHECK(rep.type == SingularityType::NotSimple);
    CHECK_FALSE(rep.diagnostic.empty());
    CHECK_THROWS_AS(splitting_residual(shortjet, 5), JetTooShort);
}
