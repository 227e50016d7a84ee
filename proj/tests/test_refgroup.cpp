#include <random>
#include <set>

#include "adesurf/mpoly/ops.hpp"
#include "adesurf/mpoly/text.hpp"
#include "adesurf/refgroup/refgroup.hpp"
#include "adesurf/scenarios/data.hpp"
#include "doctest.h"

using namespace adesurf;

namespace {

NFElem z() { return NFElem::generator(cyclotomic12()); }
NFElem q(long v) { return NFElem::embed(cyclotomic12(), Rat(v)); }

const MatrixGroup& W() {
    static const MatrixGroup w = group_closure(data::w_generators());
    return w;
}

}  // namespace

TEST_CASE("compact matrices round-trip and multiply") {
    auto gens = data::w_generators();
    REQUIRE(gens.size() == 4);
    for (const auto& s : gens) {
        CHECK(GroupMatrix::from_matrix(s.to_matrix()) == s);
        const auto prod = s * s;
        CHECK(GroupMatrix::from_matrix(s.to_matrix() * s.to_matrix()) == prod);
    }
    CHECK(gens[0].entry(2, 2) == z().pow(4));
    CHECK(gens[0].entry(2, 2).pow(3) == q(1));
    const auto half = GroupMatrix::scalar(NFElem::embed(cyclotomic12(), Rat(1, 2)));
    CHECK(half * GroupMatrix::scalar(q(2)) == GroupMatrix());
    CHECK_THROWS_AS(GroupMatrix::scalar(q(0)), SingularMatrix);
    auto K = NumberField::create(cyclotomic_polynomial(8), "w");
    Matrix<NFElem> bad = identity_matrix<NFElem>(4);
    bad[0][0] = NFElem::generator(K);
    CHECK_THROWS_AS(GroupMatrix::from_matrix(bad), FieldMismatch);
}

TEST_CASE("small closures") {
    CHECK(group_closure({GroupMatrix()}).order() == 1);
    CHECK(group_closure({GroupMatrix::scalar(q(-1))}).order() == 2);
    CHECK(group_closure({GroupMatrix::scalar(z())}).order() == 12);
    auto abelian = group_closure({GroupMatrix::scalar(z()), data::w_generators()[0]});
    CHECK(abelian.order() == 36);
    CHECK(center(abelian).order() == abelian.order());
    CHECK_THROWS_AS(group_closure({GroupMatrix::scalar(q(2))}, 50), CapExceeded);
    CHECK_THROWS_AS(group_closure(data::w_generators(), 1000), CapExceeded);
}

TEST_CASE("the reflection group") {
    const auto& G = W();
    CHECK(G.order() == 155520);
    const auto Z = center(G);
    CHECK(Z.order() == 6);
    CHECK(G.order() / Z.order() == 25920);
    CHECK(transversal(G, Z).size() == 25920);

    std::mt19937_64 rng(0x5EED);
    for (int i = 0; i < 1000; ++i) {
        const auto& a = G.elements()[rng() % G.order()];
        const auto& b = G.elements()[rng() % G.order()];
        CHECK(G.contains(a * b));
    }
    for (const auto& s : G.generators()) {
        const auto inv = GroupMatrix::from_matrix(inverse(s.to_matrix()));
        CHECK(G.contains(inv));
        CHECK(inv * s == GroupMatrix());
    }
}

TEST_CASE("polynomial action") {
    const auto g3 = convert<NFElem>(data::g_power(3));
    for (const auto& s : data::w_generators()) CHECK(act_on_poly(g3, s) == g3);
    CHECK(act_on_poly(g3, GroupMatrix()) == g3);
    const auto x3 = NFPoly::variable(projective_ring(), 2);
    CHECK(act_on_poly(x3, data::w_generators()[0]) == z().pow(4) * x3);
    // invariance passes to products
    std::mt19937_64 rng(0x5EED + 7);
    const auto& G = W();
    for (int i = 0; i < 5; ++i) CHECK(act_on_poly(g3, G.elements()[rng() % G.order()]) == g3);
    auto K = NumberField::create(cyclotomic_polynomial(8), "w");
    const auto foreign = NFPoly::monomial(projective_ring(), Monomial::variable(0), NFElem::generator(K));
    CHECK_THROWS_AS(act_on_poly(foreign, data::w_generators()[1]), FieldMismatch);
}

TEST_CASE("projective points") {
    std::mt19937_64 rng(0x5EED);
    auto draw = [&] {
        std::vector<Rat> c(4);
        for (auto& x : c) x = Rat(static_cast<long>(rng() % 19) - 9);
        return NFElem(cyclotomic12(), c);
    };
    for (int i = 0; i < 1000; ++i) {
        std::vector<NFElem> v{draw(), draw(), draw(), draw()};
        if (is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]) && is_zero(v[3])) continue;
        NFElem s = draw();
        if (is_zero(s)) continue;
        std::vector<NFElem> w;
        for (const auto& x : v) w.push_back(s * x);
        CHECK(ProjectivePoint(v) == ProjectivePoint(w));
    }
    CHECK_THROWS(ProjectivePoint({q(0), q(0), q(0), q(0)}));
}

TEST_CASE("orbit of the seed point") {
    const auto& G = W();
    const auto p = data::seed_point();
    const auto orb = projective_orbit(p, G);
    CHECK(orb.size() == 1440);
    CHECK(G.order() % orb.size() == 0);
    std::set<ProjectivePoint> pts(orb.points.begin(), orb.points.end());
    for (const auto& x : orb.points)
        for (const auto& s : G.generators()) CHECK(pts.count(act_on_point(s, x, orb.action)) == 1);
    CHECK(std::is_sorted(orb.points.begin(), orb.points.end()));
    CHECK(orb.point_digest().size() == 64);

    const auto Z = center(G);
    const auto check = orbit_vs_transversal_consistency(G, Z, p);
    CHECK(check.consistent);
    CHECK(check.representatives == 25920);
    CHECK(check.transversal_size == 1440);

    const auto trivial = group_closure({GroupMatrix()});
    CHECK(projective_orbit(p, trivial).size() == 1);
    const auto scalars = group_closure({GroupMatrix::scalar(z())});
    CHECK(projective_orbit(p, scalars).size() == 1);
    CHECK(orbit_vs_transversal_consistency(scalars, center(scalars), p).transversal_size == 1);
}
