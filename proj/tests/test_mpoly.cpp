#include <random>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/mpoly/ops.hpp"
#include "adesurf/mpoly/order.hpp"
#include "adesurf/mpoly/text.hpp"
#include "doctest.h"

using namespace adesurf;

namespace {

QPoly random_poly(std::mt19937_64& rng, const RingRef& R, int terms, int maxdeg) {
    std::vector<QPoly::Term> t;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (std::size_t v = 0; v < R->nvars(); ++v) m[v] = static_cast<std::uint32_t>(rng() % (maxdeg + 1));
        t.emplace_back(m, Rat(static_cast<int>(rng() % 11) - 5));
    }
    return QPoly::from_terms(R, std::move(t));
}

}  // namespace

TEST_CASE("parse and format") {
    auto R = projective_ring();
    QPoly f = parse_poly("x1^8 - 6*x1^6*x2^2", R);
    CHECK(f.size() == 2);
    CHECK(format_poly(f) == "x1^8 - 6*x1^6*x2^2");
    CHECK(parse_poly("0", R).is_zero());
    CHECK(format_poly(parse_poly("0", R)) == "0");
    CHECK_THROWS_AS(parse_poly("x5", R), UnknownVariable);
    CHECK_THROWS_AS(parse_poly("x1 +", R), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1 ** 2", R), SyntaxError);
    CHECK(format_poly(parse_poly("-1/2*x2 + 3 + x1*x1", R)) == "x1^2 - 1/2*x2 + 3");

    auto K = NumberField::cyclotomic(12);
    NFPoly g = parse_poly("(2*z^3 - z)*x1 - (z^2)*x2^2 + 1", R, K);
    CHECK(format_poly(g) == "(-z^2)*x2^2 + (2*z^3 - z)*x1 + 1");
    CHECK(parse_poly(format_poly(g), R, K) == g);
    CHECK(parse_field_element("z^12", K) == NFElem(1));
}

TEST_CASE("round trip on random polynomials") {
    std::mt19937_64 rng(3);
    auto R = projective_ring();
    for (int i = 0; i < 200; ++i) {
        QPoly f = random_poly(rng, R, 12, 5);
        CHECK(parse_poly(format_poly(f), R) == f);
    }
}

TEST_CASE("power substitution and derivatives") {
    auto R = projective_ring();
    QPoly f = parse_poly("x1^8", R);
    CHECK(substitute_powers(f, 2) == parse_poly("x1^16", R));
    CHECK(substitute_powers(f, 1) == f);
    CHECK(partial_derivative(f, 0) == parse_poly("8*x1^7", R));
    CHECK(partial_derivative(parse_poly("5", R), 2).is_zero());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        QPoly a = random_poly(rng, R, 6, 3), b = random_poly(rng, R, 6, 3);
        CHECK(substitute_powers(a * b, 3) == substitute_powers(a, 3) * substitute_powers(b, 3));
        CHECK(substitute_powers(a + b, 2) == substitute_powers(a, 2) + substitute_powers(b, 2));
    }
}

TEST_CASE("grading, hessian, evaluation") {
    auto R = make_ring({"x", "y", "z"});
    QPoly f = parse_poly("x^2 + y^2 + z^2 + x^3", R);
    CHECK(graded_component(f, 2) == parse_poly("x^2 + y^2 + z^2", R));
    CHECK(graded_component(f, 9).is_zero());
    auto H = hessian_at_origin(f);
    CHECK(H[0][0] == 2);
    CHECK(H[1][1] == 2);
    CHECK(H[0][1] == 0);
    CHECK(rank(hessian_at_origin(parse_poly("x^3 - x*y^2 + z^2", R))) == 1);
    auto Hxy = hessian_at_origin(parse_poly("x*y", R));
    CHECK(Hxy[0][1] == 1);
    CHECK(Hxy[0][0] == 0);
    auto Hs = hessian(f);
    CHECK(Hs[0][0] == parse_poly("6*x + 2", R));

    auto P4 = projective_ring();
    CHECK(evaluate(parse_poly("x1", P4), std::vector<Rat>{1, 0, 0, 0}) == 1);
}

TEST_CASE("linear changes") {
    auto R = make_ring({"x", "y"});
    QPoly f = parse_poly("x^2 - y^2", R);
    CHECK(linear_change(f, identity_matrix<Rat>(2)) == f);
    Matrix<Rat> swap = {{0, 1}, {1, 0}};
    CHECK(linear_change(f, swap) == parse_poly("y^2 - x^2", R));
    Matrix<Rat> sing = {{1, 1}, {2, 2}};
    CHECK_THROWS_AS(linear_change(f, sing), SingularMatrix);

    // f(A(Bx)) = (f o A)(Bx)
    std::mt19937_64 rng(5);
    auto R3 = make_ring({"x", "y", "z"});
    for (int i = 0; i < 10; ++i) {
        QPoly h = random_poly(rng, R3, 5, 3);
        Matrix<Rat> A(3, std::vector<Rat>(3)), B(3, std::vector<Rat>(3));
        for (auto* M : {&A, &B})
            for (auto& row : *M)
                for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        if (rank(A) < 3 || rank(B) < 3) continue;
        CHECK(linear_change(linear_change(h, A), B) == linear_change(h, A * B));
    }
}

TEST_CASE("local charts") {
    auto P4 = projective_ring();
    QPoly x1 = parse_poly("x1", P4);
    QPoly loc = local_chart(x1, 3, std::vector<Rat>{0, 0, 0, 1});
    CHECK(format_poly(loc) == "x");
    CHECK_THROWS_AS(local_chart(x1, 0, std::vector<Rat>{0, 0, 0, 1}), ChartCoordinateZero);
    QPoly f = parse_poly("x1^2 - x2*x4", P4);
    QPoly g = local_chart(f, 3, std::vector<Rat>{1, 1, 5, 1});
    CHECK(g.coefficient(Monomial{}) == 0);
}

TEST_CASE("monomial orders") {
    auto lex = MonomialOrder::lex(3), grl = MonomialOrder::grevlex(3), loc = MonomialOrder::local(3);
    Monomial x = Monomial::variable(0), y2 = Monomial::variable(1, 2), one;
    CHECK(lex.greater(x, y2));
    CHECK(grl.greater(y2, x));
    CHECK(loc.greater(one, x));
    CHECK(loc.greater(x, y2));
    auto el = MonomialOrder::elimination(3, 1);
    CHECK(el.greater(x, y2));
}
