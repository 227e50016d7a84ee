#include <random>

#include "adesurf/groebner/groebner.hpp"
#include "adesurf/groebner/zerodim.hpp"
#include "adesurf/mpoly/ops.hpp"
#include "adesurf/mpoly/text.hpp"
#include "doctest.h"

using namespace adesurf;

namespace {

Ideal<Rat> ideal(const RingRef& R, std::initializer_list<const char*> gens) {
    std::vector<QPoly> g;
    for (auto s : gens) g.push_back(parse_poly(s, R));
    return Ideal<Rat>(R, std::move(g));
}

std::vector<std::string> texts(const GroebnerBasis<Rat>& G) {
    std::vector<std::string> v;
    for (const auto& g : G.basis) v.push_back(format_poly(g));
    return v;
}

}  // namespace

TEST_CASE("small bases") {
    auto R = make_ring({"x", "y"});
    auto G = buchberger(ideal(R, {"x - y", "y - 1"}), MonomialOrder::lex(2));
    CHECK(texts(G) == std::vector<std::string>{"y - 1", "x - 1"});
    auto H = buchberger(ideal(R, {"x^2", "x*y"}), MonomialOrder::grevlex(2));
    CHECK(texts(H) == std::vector<std::string>{"x*y", "x^2"});
    auto U = buchberger(ideal(R, {"x", "x - 1"}), MonomialOrder::grevlex(2));
    CHECK(U.is_unit());
}

TEST_CASE("normal forms") {
    auto R = make_ring({"x", "y", "z"});
    auto I = ideal(R, {"x^2 - y*z", "y^3 - x*z + 1", "z^2 - x"});
    auto G = buchberger(I, MonomialOrder::grevlex(3));
    CHECK(check_groebner(G, I.gens));
    for (const auto& g : I.gens) CHECK(normal_form(g, G).is_zero());
    QPoly f = parse_poly("x^5*y + z^7 - 3", R);
    QPoly r = normal_form(f, G);
    CHECK(normal_form(r, G) == r);
    CHECK(normal_form(QPoly::constant(R, Rat(1)), G) == QPoly::constant(R, Rat(1)));
}

TEST_CASE("hilbert data") {
    auto P = projective_ring();
    auto G = buchberger(ideal(P, {"x1", "x2", "x3"}), MonomialOrder::grevlex(4));
    auto h = hilbert_dim_deg(G);
    CHECK(h.dimension == 0);
    CHECK(h.degree == 1);
    auto conic = buchberger(ideal(P, {"x1^2 - x2*x3", "x4"}), MonomialOrder::grevlex(4));
    CHECK(hilbert_dim_deg(conic).dimension == 1);
    CHECK(hilbert_dim_deg(conic).degree == 2);
    auto empty = buchberger(ideal(P, {"x1", "x2", "x3", "x4^3"}), MonomialOrder::grevlex(4));
    CHECK(hilbert_dim_deg(empty).dimension == -1);
    auto R = make_ring({"x", "y"});
    auto aff = buchberger(ideal(R, {"x^2 - 1", "y - x"}), MonomialOrder::grevlex(2));
    CHECK_THROWS_AS(hilbert_dim_deg(aff), NotHomogeneous);
    CHECK(affine_dimension(aff).krull_dimension == 0);
    CHECK(affine_dimension(aff).multiplicity == 2);
}

TEST_CASE("hilbert data is order independent") {
    std::mt19937_64 rng(17);
    auto P = make_ring({"a", "b", "c", "d"});
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<QPoly> gens;
        for (int k = 0; k < 3; ++k) {
            std::vector<QPoly::Term> t;
            const std::uint32_t d = 2;
            for (int s = 0; s < 4; ++s) {
                Monomial m;
                std::uint32_t left = d;
                for (std::size_t v = 0; v < 3; ++v) {
                    std::uint32_t e = static_cast<std::uint32_t>(rng() % (left + 1));
                    m[v] = e;
                    left -= e;
                }
                m[3] = left;
                t.emplace_back(m, Rat(static_cast<int>(rng() % 7) - 3));
            }
            gens.push_back(QPoly::from_terms(P, std::move(t)));
        }
        Ideal<Rat> I(P, gens);
        auto a = hilbert_dim_deg(buchberger(I, MonomialOrder::grevlex(4)));
        auto b = hilbert_dim_deg(buchberger(I, MonomialOrder::lex(4)));
        CHECK(a == b);
    }
}

TEST_CASE("elimination") {
    auto R = make_ring({"t", "x", "y"});
    auto E = eliminate(ideal(R, {"x - t", "y - t^2"}), {1, 2});
    REQUIRE(E.gens.size() == 1);
    CHECK(format_poly(E.gens[0]) == "x^2 - y");
    auto same = eliminate(ideal(R, {"x - t"}), {0, 1, 2});
    CHECK(same.gens.size() == 1);
    auto R2 = make_ring({"x", "y"});
    auto last = eliminate(ideal(R2, {"x^2 - 2", "y - x"}), {1});
    REQUIRE(last.gens.size() == 1);
    CHECK(format_poly(last.gens[0]) == "y^2 - 2");
}

TEST_CASE("zero-dimensional points") {
    auto R = make_ring({"x", "y"});
    auto s = zero_dim_points(ideal(R, {"x - 1", "y - 2"}));
    REQUIRE(s.components.size() == 1);
    CHECK(s.total_point_count == 1);
    CHECK(s.components[0].point[0] == NFElem(1));
    CHECK(s.components[0].point[1] == NFElem(2));

    auto q = zero_dim_points(ideal(R, {"x^2 + 1", "y - x"}));
    REQUIRE(q.components.size() == 1);
    CHECK(q.components[0].field->degree() == 2);
    CHECK(q.total_point_count == 2);

    // non-reduced: radical has 2 points
    auto m = zero_dim_points(ideal(R, {"x^4 - 2*x^2 + 1", "y^2"}));
    CHECK(m.total_point_count == 2);
    CHECK(m.quotient_dimension == 8);

    CHECK_THROWS_AS(zero_dim_points(ideal(R, {"x*y"})), NotZeroDimensional);
}

TEST_CASE("points satisfy the generators") {
    auto R = make_ring({"x", "y", "z"});
    auto I = ideal(R, {"x^2 + y^2 - 2", "x*y - z", "z^2 - 1"});
    auto s = zero_dim_points(I);
    CHECK(s.total_point_count == 4);
    for (const auto& c : s.components)
        for (const auto& g : I.gens) CHECK(is_zero(evaluate(g, c.point)));
}

TEST_CASE("projective points") {
    auto P = make_ring({"a", "b", "c"});
    auto I = ideal(P, {"a*b", "c^2 - a^2 - b^2"});
    auto s = projective_zero_dim_points(I);
    CHECK(s.total_point_count == 4);
    for (const auto& c : s.components) {
        for (const auto& g : I.gens) CHECK(is_zero(evaluate(g, c.point)));
    }
}

TEST_CASE("modular mirror") {
    auto P = projective_ring();
    auto h = modular_mirror(ideal(P, {"x1", "x2", "x3"}), 101);
    CHECK(h.dimension == 0);
    CHECK(h.degree == 1);
    CHECK_THROWS_AS(modular_mirror(ideal(P, {"1/101*x1", "x2"}), 101), BadPrime);
    auto K = NumberField::cyclotomic(12);
    std::vector<NFPoly> g{parse_poly("x1 - (z)*x2", P, K), parse_poly("x3", P, K), parse_poly("x4^2", P, K)};
    auto hk = modular_mirror(Ideal<NFElem>(P, g), 1000033);
    CHECK(hk.dimension == 0);
    CHECK(hk.degree == 2);
}
