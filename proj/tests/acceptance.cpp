// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/groebner/groebner.hpp"
#include "adesurf/localsing/arnold.hpp"
#include "adesurf/mpoly/linalg.hpp"
#include "adesurf/mpoly/ops.hpp"
#include "adesurf/mpoly/text.hpp"
#include "adesurf/refgroup/refgroup.hpp"
#include "adesurf/scenarios/data.hpp"
#include "adesurf/scenarios/scenarios.hpp"

using namespace adesurf;
using nlohmann::json;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

std::map<int, Verdict> verdicts;

template <class Fn>
void criterion(int n, Fn&& fn) {
    std::cerr << "[acceptance] criterion " << n << std::endl;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = fn();
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verdicts[n] = v;
}

const json& stage(const json& body, const std::string& name) {
    for (const auto& st : body["stages"])
        if (st["name"] == name) return st;
    throw Error("no stage " + name);
}

bool stage_ok(const json& body, const std::string& name) { return stage(body, name)["ok"].get<bool>(); }

std::string yes(bool b) { return b ? "yes" : "NO"; }

RunOptions options(Mode mode) {
    RunOptions o;
    o.mode = mode;
    o.progress = [](const std::string& line) { std::cerr << "  " << line << std::endl; };
    return o;
}

Matrix<Rat> random_invertible(std::mt19937_64& rng) {
    for (;;) {
        Matrix<Rat> M(3, std::vector<Rat>(3));
        for (auto& row : M)
            for (auto& x : row) x = Rat(static_cast<long>(rng() % 7) - 3);
        if (rank(M) == 3) return M;
    }
}

RatPoly random_poly(std::mt19937_64& rng, int deg) {
    std::vector<Rat> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(static_cast<int>(rng() % 21) - 10);
    v.back() = Rat(1);
    return RatPoly(std::move(v));
}

NFElem random_elem(std::mt19937_64& rng, const FieldRef& K) {
    std::vector<Rat> c;
    for (int i = 0; i < K->degree(); ++i) {
        c.emplace_back(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 4));
        c.back().canonicalize();
    }
    return NFElem(K, c);
}

Verdict property_suites() {
    std::mt19937_64 rng(0x5EED);
    std::vector<std::string> failed;
    std::size_t checks = 0;

    const RingRef xyz = make_ring({"x", "y", "z"});
    bool arnold = true, linear = true;
    for (const auto& c : localsing::arnold_normal_forms()) {
        const auto f = parse_poly(c.poly, xyz);
        const auto rep = classify_ade(LocalFunction<Rat>(f));
        arnold = arnold && rep.type_name() == c.type && rep.milnor == c.mu && rep.tjurina == c.mu && rep.corank == c.corank;
        ++checks;
        for (int trial = 0; trial < 20; ++trial) {
            const LocalFunction<Rat> h(linear_change(f, random_invertible(rng)));
            const auto r = classify_ade(h);
            linear = linear && milnor_number(h) == c.mu && tjurina_number(h) == c.mu && r.type_name() == c.type;
            ++checks;
        }
    }
    if (!arnold) failed.push_back("arnold");
    if (!linear) failed.push_back("linear-change");

    // S-polynomial reduction on every basis computed here, including J(g).
    bool spoly = true;
    const RingRef R3 = make_ring({"x", "y", "z"});
    const RingRef R4 = make_ring({"x1", "x2", "x3", "x4"});
    std::vector<Ideal<Rat>> ideals{
        Ideal<Rat>(R3, {parse_poly("x^2 + y^2 + z^2 - 1", R3), parse_poly("x*y - z", R3), parse_poly("x - y + z^3", R3)}),
        Ideal<Rat>(R4, {parse_poly("x1 + x2 + x3 + x4", R4), parse_poly("x1*x2 + x2*x3 + x3*x4 + x4*x1", R4),
                        parse_poly("x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2", R4),
                        parse_poly("x1*x2*x3*x4 - 1", R4)}),
        Ideal<Rat>(R3, {parse_poly("x^3 - 2*x*y", R3), parse_poly("x^2*y - 2*y^2 + x", R3)}),
    };
    const QPoly g = data::g();
    ideals.emplace_back(g.ring(), gradient(g));
    for (const auto& I : ideals)
        for (const auto& ord : {MonomialOrder::grevlex(I.ring->nvars()), MonomialOrder::lex(I.ring->nvars())}) {
            if (I.ring == g.ring() && ord.kind() != MonomialOrder::Kind::Grevlex) continue;
            spoly = spoly && check_groebner(buchberger(I, ord), I.gens);
            ++checks;
        }
    if (!spoly) failed.push_back("s-polynomials");

    bool factors = true;
    for (int trial = 0; trial < 100; ++trial) {
        RatPoly f({Rat(1)});
        for (int i = 0, parts = 1 + static_cast<int>(rng() % 4); i < parts; ++i) {
            const RatPoly q = random_poly(rng, 1 + static_cast<int>(rng() % 8));
            for (int e = 0, m = 1 + static_cast<int>(rng() % 2); e < m; ++e) f = f * q;
        }
        RatPoly prod({Rat(1)});
        for (const auto& fp : factor_rational_upoly(f)) {
            factors = factors && is_irreducible(fp.factor);
            for (int i = 0; i < fp.multiplicity; ++i) prod = prod * fp.factor;
        }
        factors = factors && prod == f.monic();
        ++checks;
    }
    if (!factors) failed.push_back("factor round-trip");

    bool field = true;
    for (const auto& K : {cyclotomic12(), NumberField::create(data::k8_polynomial())}) {
        for (int i = 0; i < 200; ++i) {
            const NFElem a = random_elem(rng, K), b = random_elem(rng, K), c = random_elem(rng, K);
            field = field && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
                    (is_zero(a) || a * a.inverse() == NFElem(1));
            ++checks;
        }
    }
    if (!field) failed.push_back("field axioms");

    const auto G = group_closure(data::w_generators());
    const auto orb = projective_orbit(data::seed_point(), G);
    const std::set<ProjectivePoint> pts(orb.points.begin(), orb.points.end());
    bool stable = true;
    for (const auto& x : orb.points)
        for (const auto& s : G.generators()) stable = stable && pts.count(act_on_point(s, x, orb.action)) == 1;
    checks += orb.size();
    if (!stable) failed.push_back("orbit stability");

    std::string detail = std::to_string(checks) + " checks";
    for (const auto& f : failed) detail += "; failed " + f;
    return {failed.empty(), detail};
}

}  // namespace

int main() {
    const auto exact = options(Mode::Exact);
    const auto modular = options(Mode::Modular);

    criterion(9, [&] {
        const bool bounds = miyaoka_bound(8) == 53 && miyaoka_bound(16) == 492 && miyaoka_bound(24) == 1736;
        const bool respected = 44 <= miyaoka_bound(8) && 352 <= miyaoka_bound(16) && 1440 <= miyaoka_bound(24) &&
                               1188 <= miyaoka_bound(24) && 2816 <= miyaoka_bound(32);
        return Verdict{bounds && respected, "bounds 53/492/1736; certified counts within them"};
    });

    json d;
    criterion(1, [&] {
        d = to_json(verify_part_d(modular));
        const auto& g = stage(d, "group")["data"];
        const bool ok = g["order"] == 155520 && g["center"] == 6 && g["projective_order"] == 25920;
        return Verdict{ok, "|W| " + g["order"].dump() + ", center " + g["center"].dump() + ", projective " +
                               g["projective_order"].dump()};
    });
    criterion(2, [&] {
        const auto& inv = stage(d, "invariance")["data"]["generators"];
        const bool ok = inv.size() == 4 && std::all_of(inv.begin(), inv.end(), [](const json& b) { return b.get<bool>(); });
        return Verdict{ok, "g[3] fixed by s1..s4: " + yes(ok)};
    });
    criterion(3, [&] {
        const auto& o = stage(d, "orbit")["data"];
        const bool ok = o["size"] == 1440 && o["all_singular"].get<bool>() && o["in_torus"] == 1188;
        return Verdict{ok, "orbit " + o["size"].dump() + ", in U " + o["in_torus"].dump() + ", all singular " +
                               yes(o["all_singular"].get<bool>())};
    });
    criterion(8, [&] {
        const auto& gd = stage(d, "global_degree")["data"];
        const bool ok = d["status"] == "COMPLETE" && d["accounting"].get<bool>() && gd["degree"] == 5760 &&
                        gd["method"] == "modular" && gd["primes"].size() >= 3 && stage_ok(d, "global_degree");
        return Verdict{ok, "degree " + gd["degree"].dump() + " at " + std::to_string(gd["primes"].size()) +
                               " primes; 1440*4 accounting " + yes(d["accounting"].get<bool>())};
    });

    json a;
    criterion(5, [&] {
        a = to_json(verify_part_a(exact));
        const auto& jac = stage(a, "jacobian")["data"];
        const auto& hyp = stage(a, "hyperplanes")["data"];
        const auto count = a["anchors"]["a.count"];
        const bool ok = a["status"] == "COMPLETE" && jac["dimension"] == 0 && jac["degree"] == 176 &&
                        hyp["dimension"] == -1 && hyp["method"] == "exact" && count == 44 && a["accounting"].get<bool>();
        return Verdict{ok, "dim " + jac["dimension"].dump() + ", hyperplanes " + hyp["dimension"].dump() + ", points " +
                               count.dump() + ", degree " + jac["degree"].dump()};
    });

    json c;
    criterion(7, [&] {
        c = to_json(verify_part_c(modular));
        const auto& an = c["anchors"];
        const auto& gd = stage(c, "global_degree")["data"];
        const bool ok = c["status"] == "COMPLETE" && an["c.hyperplane_points"] == 120 &&
                        an["c.residue_degrees"] == json::array({4, 8}) && an["c.a1"] == 24 && an["c.a2"] == 96 &&
                        gd["degree"] == 1624 && gd["method"] == "modular" && gd["primes"].size() >= 3 &&
                        stage_ok(c, "global_degree");
        return Verdict{ok, "slices " + an["c.hyperplane_points"].dump() + " points, residue degrees " +
                               an["c.residue_degrees"].dump() + ", A1 " + an["c.a1"].dump() + ", A2 " +
                               an["c.a2"].dump() + ", degree " + gd["degree"].dump()};
    });

    criterion(4, [&] {
        const auto& seed = stage(d, "classify_seed")["data"];
        const auto& push = stage(a, "pushforward")["data"];
        const bool seed_ok = seed["type"] == "D4" && seed["milnor"] == 4 && seed["tjurina"] == 4;
        const bool push_ok = push["types"] == json{{"D4", 44}};
        const bool mu2 = c["anchors"]["c.degree8_milnor"] == 2;
        return Verdict{seed_ok && push_ok && mu2, "seed D4 mu=tau=4 " + yes(seed_ok) + ", 44 pushforward D4 " +
                                                      yes(push_ok) + ", degree-8 slice mu 2 " + yes(mu2)};
    });

    criterion(6, [&] {
        const std::map<unsigned, std::uint64_t> expect{{2, 352}, {3, 1188}, {4, 2816}};
        bool ok = true;
        std::string detail;
        for (const auto& [k, bound] : expect) {
            const auto cov = cover_singular_containment(k, exact);
            const auto body = to_json(cov);
            bool dims = true;
            for (const auto& h : stage(body, "pairwise")["data"]["ideals"])
                dims = dims && h["dimension"] == 0 && h["method"] == "exact";
            ok = ok && dims && cov.derivative_identity && cov.lower_bound == bound && cov.status() == Status::Complete;
            detail += "k=" + std::to_string(k) + ": " + std::to_string(cov.lower_bound) + (dims ? "" : " (pairwise FAIL)") +
                      (cov.derivative_identity ? "" : " (identity FAIL)") + "; ";
        }
        ok = ok && d["anchors"]["d.count"] == 1440;
        detail += "k=3 total " + d["anchors"]["d.count"].dump();
        return Verdict{ok, detail};
    });

    criterion(10, property_suites);

    int failed = 0;
    for (const auto& [n, v] : verdicts) {
        std::printf("criterion %2d  %s  %s  (%.0f s)\n", n, v.ok ? "PASS" : "FAIL", v.detail.c_str(), v.seconds);
        failed += v.ok ? 0 : 1;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
