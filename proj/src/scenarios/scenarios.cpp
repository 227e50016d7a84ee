#include "adesurf/scenarios/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "adesurf/digest.hpp"
#include "adesurf/exactnum/factor.hpp"
#include "adesurf/groebner/zerodim.hpp"
#include "adesurf/localsing/localsing.hpp"
#include "adesurf/mpoly/ops.hpp"
#include "adesurf/mpoly/text.hpp"
#include "adesurf/refgroup/refgroup.hpp"
#include "adesurf/scenarios/data.hpp"

namespace adesurf {

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "modular"; }

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Orbit: return "orbit";
        case Provenance::Pushforward: return "pushforward";
        case Provenance::HyperplaneSlice: return "hyperplane-slice";
        case Provenance::Cover: return "cover";
        case Provenance::Direct: return "direct";
    }
    return "direct";
}

std::string to_string(Status s) { return s == Status::Complete ? "COMPLETE" : "INCOMPLETE"; }

std::vector<std::uint64_t> default_primes() { return primes_congruent_one(12, 1000000, 3); }

std::uint64_t miyaoka_bound(std::uint64_t d) {
    if (d == 0) throw Error("miyaoka bound needs d >= 1");
    const Integer num = Integer(16) * Integer(static_cast<unsigned long>(d)) *
                        Integer(static_cast<unsigned long>(d - 1)) * Integer(static_cast<unsigned long>(d - 1));
    const Integer q = num / Integer(117);  // floor, everything nonnegative
    return q.get_ui();
}

SurfaceScenario SurfaceScenario::load(unsigned k) {
    if (k == 0) throw Error("power k must be positive");
    SurfaceScenario s{k == 1 ? "g" : "g[" + std::to_string(k) + "]", k == 1 ? data::g() : data::g_power(k), k};
    const long deg = s.poly.total_degree();
    if (!s.poly.is_homogeneous() || deg != static_cast<long>(8 * k)) throw Error(s.name + " has the wrong degree");
    QPoly euler = QPoly::constant(s.poly.ring(), Rat(0));
    const auto grad = gradient(s.poly);
    for (std::size_t i = 0; i < grad.size(); ++i) euler = euler + QPoly::variable(s.poly.ring(), i) * grad[i];
    if (!(euler == Rat(deg) * s.poly)) throw Error(s.name + " fails the Euler identity");
    return s;
}

Status CensusCertificate::status() const { return failing_stage() ? Status::Incomplete : Status::Complete; }

std::optional<std::string> CensusCertificate::failing_stage() const {
    for (const auto& st : stages)
        if (!st.ok) return st.name;
    if (!degree_accounting(*this)) return std::string("accounting");
    return std::nullopt;
}

bool degree_accounting(const CensusCertificate& cert) {
    if (!cert.global || cert.global->dimension != 0 || cert.groups.empty()) return false;
    Integer sum = 0;
    for (const auto& g : cert.groups) {
        if (g.tau == 0) return false;
        sum += Integer(static_cast<unsigned long>(g.count)) * Integer(static_cast<unsigned long>(g.tau));
    }
    return sum == cert.global->degree;
}

Status CoverAnalysis::status() const {
    for (const auto& st : stages)
        if (!st.ok) return Status::Incomplete;
    return Status::Complete;
}

namespace {

using nlohmann::json;

// Runs fn(0..n-1) on up to `threads` workers; rethrows the first failure by index.
void parallel_for(unsigned threads, std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(threads, n);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

json hilbert_json(const HilbertData& h) {
    return json{{"dimension", h.dimension}, {"degree", h.degree.get_si()}};
}

json point_json(const std::vector<NFElem>& pt, const FieldRef& field) {
    json coords = json::array();
    for (const auto& x : pt) {
        json c = json::array();
        for (const auto& r : field->reduce(x.coords())) c.push_back(to_string(r));
        coords.push_back(std::move(c));
    }
    return json{{"modulus", field->modulus().to_string(field->generator_name())}, {"coordinates", coords}};
}

// Runs a stage body; an exception turns into a failed stage.
Stage run_stage(const std::string& name, const RunOptions& opts, const std::function<void(Stage&)>& body) {
    Stage st;
    st.name = name;
    opts.note("stage " + name);
    try {
        body(st);
    } catch (const std::exception& e) {
        st.ok = false;
        st.detail = std::string("error: ") + e.what();
    }
    opts.note("stage " + name + (st.ok ? " ok" : " failed: " + st.detail));
    return st;
}

// ---- shared intermediate results ------------------------------------------

template <class T>
struct Memo {
    std::mutex m;
    std::optional<T> value;

    template <class Fn>
    const T& get(Fn&& fn) {
        std::lock_guard<std::mutex> lock(m);
        if (!value) value.emplace(fn());
        return *value;
    }
};

gb::ProgressFn gb_heartbeat(const RunOptions& opts, std::string label) {
    if (!opts.progress) return {};
    return [&opts, label](const gb::EngineStats& s) {
        opts.note(label + ": pairs " + std::to_string(s.pairs_reduced) + ", basis " + std::to_string(s.basis_size) +
                  ", pending " + std::to_string(s.pairs_pending));
    };
}

struct GroupData {
    MatrixGroup group{{}, {}};
    std::size_t center = 0;
    std::size_t projective = 0;
    std::string generator_digest;
};

const GroupData& w_group(const RunOptions& opts) {
    static Memo<GroupData> memo;
    return memo.get([&] {
        GroupData d;
        const auto gens = data::w_generators();
        std::string text;
        for (const auto& s : gens) text += s.to_string() + "\n";
        d.generator_digest = sha256_hex(text);
        d.group = group_closure(gens, kDefaultClosureCap, [&](std::size_t n) {
            if (n % 20000 == 0) opts.note("closure: " + std::to_string(n) + " elements");
        });
        const MatrixGroup Z = center(d.group);
        d.center = Z.order();
        d.projective = transversal(d.group, Z).size();
        return d;
    });
}

const OrbitCertificate& seed_orbit(const RunOptions& opts) {
    static Memo<OrbitCertificate> memo;
    return memo.get([&] { return projective_orbit(data::seed_point(), w_group(opts).group); });
}

bool in_torus(const ProjectivePoint& p) {
    return std::none_of(p.coords().begin(), p.coords().end(), [](const NFElem& x) { return is_zero(x); });
}

const GroebnerBasis<Rat>& jacobian_g(const RunOptions& opts) {
    static Memo<GroebnerBasis<Rat>> memo;
    return memo.get([&] {
        const QPoly g = data::g();
        return buchberger(Ideal<Rat>(g.ring(), gradient(g)), MonomialOrder::grevlex(4), gb_heartbeat(opts, "J(g)"));
    });
}

QPoly torus_product(const RingRef& ring) {
    QPoly p = QPoly::constant(ring, Rat(1));
    for (std::size_t i = 0; i < ring->nvars(); ++i) p = p * QPoly::variable(ring, i);
    return p;
}

// Hilbert data of a Q-ideal for dimension claims. Mod p the Hilbert function
// of the reduced generators bounds the rational one from above, so modular
// dimensions 0 and -1 hold over Q too; a positive one proves nothing.
struct DimCheck {
    HilbertData h;
    std::string method;
};

DimCheck dimension_by_mode(const Ideal<Rat>& I, const RunOptions& opts, const std::string& label) {
    if (opts.mode == Mode::Exact)
        return {hilbert_dim_deg(buchberger(I, MonomialOrder::grevlex(I.ring->nvars()), gb_heartbeat(opts, label))), "exact"};
    HilbertData best;
    bool first = true;
    for (auto p : opts.primes) {
        const auto h = modular_mirror(I, p);
        if (first || h.dimension < best.dimension || (h.dimension == best.dimension && h.degree < best.degree)) best = h;
        first = false;
    }
    return {best, "modular bound"};
}

// sing Z(g) meets the coordinate hyperplanes in this scheme.
const DimCheck& hyperplane_meet(const RunOptions& opts) {
    static Memo<DimCheck> memo[2];
    return memo[opts.mode == Mode::Exact].get([&] {
        const QPoly g = data::g();
        auto gens = gradient(g);
        gens.push_back(torus_product(g.ring()));
        return dimension_by_mode(Ideal<Rat>(g.ring(), gens), opts, "hyperplanes");
    });
}

const ZeroDimSolution& direct_points(const RunOptions& opts) {
    static Memo<ZeroDimSolution> memo;
    return memo.get([&] {
        const QPoly g = data::g();
        std::vector<Rat> e{0, 0, 0, 1};
        std::vector<QPoly> chart_gens;
        for (const auto& d : gradient(g)) chart_gens.push_back(local_chart(d, 3, e));
        return zero_dim_points(dehomogenize_last(jacobian_g(opts)), chart_gens);
    });
}

const std::vector<DimCheck>& pairwise_dims(const RunOptions& opts) {
    static Memo<std::vector<DimCheck>> memo[2];
    return memo[opts.mode == Mode::Exact].get([&] {
        const QPoly g = data::g();
        const auto d = gradient(g);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) pairs.emplace_back(i, j);
        std::vector<DimCheck> out(pairs.size());
        parallel_for(opts.threads, pairs.size(), [&](std::size_t t) {
            const auto [i, j] = pairs[t];
            const std::string label = "Z_" + std::to_string(i + 1) + std::to_string(j + 1);
            out[t] = dimension_by_mode(Ideal<Rat>(g.ring(), {g, d[i], d[j]}), opts, label);
            opts.note(label + " dimension " + std::to_string(out[t].h.dimension));
        });
        return out;
    });
}

// Global Jacobian degree by the configured mode.
HilbertData jacobian_degree(const QPoly& f, const RunOptions& opts, std::string& method, bool& ok) {
    const Ideal<Rat> J(f.ring(), gradient(f));
    if (opts.mode == Mode::Exact) {
        method = "exact";
        ok = true;
        return hilbert_dim_deg(buchberger(J, MonomialOrder::grevlex(f.nvars()), gb_heartbeat(opts, "jacobian")));
    }
    if (opts.primes.size() < 2) throw Error("modular mode needs at least two primes");
    std::vector<HilbertData> hs(opts.primes.size());
    parallel_for(opts.threads, opts.primes.size(), [&](std::size_t i) { hs[i] = modular_mirror(J, opts.primes[i]); });
    method = "modular";
    ok = std::all_of(hs.begin(), hs.end(), [&](const HilbertData& h) { return h == hs.front(); });
    return hs.front();
}

json primes_json(const RunOptions& opts) {
    json a = json::array();
    for (auto p : opts.primes) a.push_back(p);
    return a;
}

// Expands below degree `jet`, escalating once to the cap.
SingularityReport classify_germ(const std::function<NFPoly(std::uint32_t)>& expand, std::uint32_t jet) {
    for (std::uint32_t J = jet;; J = localsing::kJetCap) {
        LocalFunction<NFElem> lf(expand(J), J);
        try {
            (void)milnor_number(lf);
            (void)tjurina_number(lf);
        } catch (const JetTooShort&) {
            if (J < localsing::kJetCap) continue;
        }
        return classify_ade(lf);
    }
}

SingularityReport classify_at(const QPoly& f, const std::vector<NFElem>& pt, std::uint32_t jet) {
    std::size_t chart = pt.size();
    while (chart > 0 && is_zero(pt[chart - 1])) --chart;
    if (chart == 0) throw Error("zero vector is not a projective point");
    --chart;
    return classify_germ([&](std::uint32_t J) { return local_chart(f, chart, pt, std::uint64_t{J - 1}); }, jet);
}

json report_json(const SingularityReport& r) { return to_json(r); }

bool is_d4(const SingularityReport& r) {
    return r.type == SingularityType::D && r.index == 4 && r.milnor == 4u && r.tjurina == 4u;
}

Stage miyaoka_stage(std::uint64_t d, std::uint64_t certified, const RunOptions& opts) {
    return run_stage("miyaoka", opts, [&](Stage& st) {
        const auto b = miyaoka_bound(d);
        st.data = json{{"degree", d}, {"bound", b}, {"certified", certified}};
        st.ok = certified <= b;
        st.detail = std::to_string(certified) + " <= " + std::to_string(b);
    });
}

}  // namespace

// ---- part (d) ---------------------------------------------------------------

CensusCertificate verify_part_d(const RunOptions& opts) {
    CensusCertificate cert;
    cert.scenario = "g[3]";
    const SurfaceScenario S = SurfaceScenario::load(3);
    const QPoly& g3 = S.poly;
    const auto grad = gradient(g3);

    cert.stages.push_back(run_stage("group", opts, [&](Stage& st) {
        const auto& G = w_group(opts);
        st.data = json{{"order", G.group.order()},
                       {"center", G.center},
                       {"projective_order", G.projective},
                       {"generator_digest", G.generator_digest}};
        cert.anchors["d.group_order"] = G.group.order();
        cert.anchors["d.center"] = G.center;
        cert.anchors["d.projective_order"] = G.projective;
        st.ok = G.group.order() == G.center * G.projective;
        st.detail = "|W| = " + std::to_string(G.group.order());
    }));

    cert.stages.push_back(run_stage("invariance", opts, [&](Stage& st) {
        const NFPoly f = convert<NFElem>(g3);
        const auto gens = data::w_generators();
        json each = json::array();
        bool all = true;
        for (const auto& s : gens) {
            const bool inv = act_on_poly(f, s) == f;
            each.push_back(inv);
            all = all && inv;
        }
        st.data = json{{"generators", each}};
        st.ok = all;
        st.detail = all ? "g[3] fixed by s1..s4" : "a generator moves g[3]";
    }));

    std::size_t orbit_size = 0, torus = 0;
    cert.stages.push_back(run_stage("orbit", opts, [&](Stage& st) {
        const auto& orb = seed_orbit(opts);
        orbit_size = orb.size();
        std::vector<char> singular(orb.size(), 0);
        parallel_for(opts.threads, orb.size(), [&](std::size_t i) {
            const auto& pt = orb.points[i].coords();
            bool ok = is_zero(evaluate(g3, pt));
            for (const auto& d : grad) ok = ok && is_zero(evaluate(d, pt));
            singular[i] = ok;
        });
        const auto bad = std::count(singular.begin(), singular.end(), 0);
        torus = static_cast<std::size_t>(std::count_if(orb.points.begin(), orb.points.end(), in_torus));
        st.data = json{{"size", orb.size()},
                       {"in_torus", torus},
                       {"action", to_string(orb.action)},
                       {"point_digest", orb.point_digest()},
                       {"all_singular", bad == 0}};
        cert.anchors["d.orbit_in_torus"] = torus;
        st.ok = bad == 0;
        st.detail = std::to_string(orb.size()) + " points, " + std::to_string(torus) + " in the torus";
    }));

    cert.stages.push_back(run_stage("orbit_transversal", opts, [&](Stage& st) {
        const auto& G = w_group(opts);
        const MatrixGroup Z = center(G.group);
        const auto chk = orbit_vs_transversal_consistency(G.group, Z, data::seed_point());
        st.data = json{{"consistent", chk.consistent},
                       {"representatives", chk.representatives},
                       {"bfs_size", chk.bfs_size},
                       {"transversal_size", chk.transversal_size}};
        st.ok = chk.consistent;
        st.detail = std::to_string(chk.representatives) + " coset representatives, " + std::to_string(chk.bfs_size) + " images";
    }));

    SingularityReport rep;
    cert.stages.push_back(run_stage("classify_seed", opts, [&](Stage& st) {
        rep = classify_at(g3, data::seed_point().coords(), 8);
        st.data = report_json(rep);
        st.ok = is_d4(rep);
        st.detail = rep.type_name();
    }));
    cert.anchors["d.type"] = rep.type_name();

    cert.stages.push_back(run_stage("global_degree", opts, [&](Stage& st) {
        bool unanimous = false;
        cert.global = jacobian_degree(g3, opts, cert.global_method, unanimous);
        st.data = hilbert_json(*cert.global);
        st.data["method"] = cert.global_method;
        if (opts.mode == Mode::Modular) st.data["primes"] = primes_json(opts);
        cert.anchors["d.jacobian_degree"] = cert.global->degree.get_si();
        st.ok = unanimous && cert.global->dimension == 0;
        st.detail = "degree " + cert.global->degree.get_str() + " (" + cert.global_method + ")";
    }));

    cert.groups.push_back({orbit_size, rep.type_name(), rep.tjurina.value_or(0), std::nullopt, Provenance::Orbit});
    cert.anchors["d.count"] = orbit_size;
    cert.stages.push_back(miyaoka_stage(24, orbit_size, opts));
    cert.anchors["d.miyaoka_bound"] = miyaoka_bound(24);
    cert.claim = "exactly " + std::to_string(orbit_size) + " singular points, all " + rep.type_name();
    return cert;
}

// ---- part (a) ---------------------------------------------------------------

CensusCertificate verify_part_a(const RunOptions& opts) {
    CensusCertificate cert;
    cert.scenario = "g";
    const SurfaceScenario S = SurfaceScenario::load(1);
    const QPoly& g = S.poly;
    const auto grad = gradient(g);

    cert.stages.push_back(run_stage("jacobian", opts, [&](Stage& st) {
        cert.global = hilbert_dim_deg(jacobian_g(opts));
        cert.global_method = "exact";
        st.data = hilbert_json(*cert.global);
        cert.anchors["a.jacobian_degree"] = cert.global->degree.get_si();
        st.ok = cert.global->dimension == 0;
    }));

    cert.stages.push_back(run_stage("hyperplanes", opts, [&](Stage& st) {
        const auto& [h, method] = hyperplane_meet(opts);
        st.data = hilbert_json(h);
        st.data["method"] = method;
        cert.anchors["a.hyperplane_dimension"] = h.dimension;
        st.ok = h.dimension == -1;
        st.detail = "sing Z(g) meets x1 x2 x3 x4 = 0 in dimension " + std::to_string(h.dimension);
    }));

    // R2: exact points in the chart x4 = 1; the hyperplane stage puts every point there.
    std::size_t direct = 0;
    cert.stages.push_back(run_stage("direct_points", opts, [&](Stage& st) {
        const auto& sol = direct_points(opts);
        direct = sol.total_point_count;
        json comps = json::array();
        for (const auto& c : sol.components) comps.push_back(point_json(c.point, c.field));
        st.data = json{{"count", direct},
                       {"quotient_dimension", sol.quotient_dimension},
                       {"components", comps},
                       {"separating_form", sol.separating_form}};
        st.ok = true;
        st.detail = std::to_string(direct) + " points in " + std::to_string(sol.components.size()) + " components";
    }));

    // R1: pushforward of the torus part of the 1440-point orbit under cubing.
    std::vector<ProjectivePoint> images;
    std::vector<SingularityReport> reps;
    cert.stages.push_back(run_stage("pushforward", opts, [&](Stage& st) {
        const auto& orb = seed_orbit(opts);
        std::map<ProjectivePoint, std::size_t> fibres;
        std::size_t torus = 0;
        for (const auto& p : orb.points) {
            if (!in_torus(p)) continue;
            ++torus;
            std::vector<NFElem> c;
            for (const auto& x : p.coords()) c.push_back(x * x * x);
            ++fibres[ProjectivePoint(std::move(c))];
        }
        std::set<std::size_t> fibre_sizes;
        for (const auto& [pt, n] : fibres) {
            images.push_back(pt);
            fibre_sizes.insert(n);
        }
        std::vector<char> singular(images.size(), 0);
        reps.resize(images.size());
        parallel_for(opts.threads, images.size(), [&](std::size_t i) {
            const auto& pt = images[i].coords();
            bool ok = is_zero(evaluate(g, pt));
            for (const auto& d : grad) ok = ok && is_zero(evaluate(d, pt));
            singular[i] = ok;
            if (ok) reps[i] = classify_at(g, pt, 8);
        });
        const bool all_singular = std::count(singular.begin(), singular.end(), 0) == 0;
        const bool all_d4 = std::all_of(reps.begin(), reps.end(), is_d4);
        json types = json::object();
        for (const auto& r : reps) types[r.type_name()] = types.value(r.type_name(), 0) + 1;
        json sizes = json::array();
        for (auto n : fibre_sizes) sizes.push_back(n);
        st.data = json{{"torus_points", torus},
                       {"images", images.size()},
                       {"fibre_sizes", sizes},
                       {"all_singular", all_singular},
                       {"types", types}};
        st.ok = all_singular && all_d4 && fibre_sizes.size() == 1;
        st.detail = std::to_string(torus) + " torus points onto " + std::to_string(images.size()) + " images";
    }));

    cert.stages.push_back(run_stage("routes_agree", opts, [&](Stage& st) {
        // R1 points are distinct singular points and R2 is complete, so equal counts mean equal sets.
        st.data = json{{"pushforward", images.size()}, {"direct", direct}};
        st.ok = !images.empty() && images.size() == direct;
    }));

    const std::string type = reps.empty() ? "unknown" : reps.front().type_name();
    const std::size_t tau = reps.empty() ? 0 : reps.front().tjurina.value_or(0);
    cert.groups.push_back({images.size(), type, tau, std::nullopt, Provenance::Pushforward});
    cert.anchors["a.count"] = direct;
    cert.anchors["a.type"] = type;
    cert.stages.push_back(miyaoka_stage(8, direct, opts));
    cert.anchors["a.miyaoka_bound"] = miyaoka_bound(8);
    cert.claim = "exactly " + std::to_string(direct) + " singular points, all " + type;
    return cert;
}

// ---- cover analysis ---------------------------------------------------------

CoverAnalysis cover_singular_containment(unsigned k, const RunOptions& opts) {
    if (k == 0) throw Error("power k must be positive");
    CoverAnalysis cov;
    cov.k = k;
    const QPoly g = data::g();
    const SurfaceScenario S = SurfaceScenario::load(k);
    const QPoly& gk = S.poly;

    cov.stages.push_back(run_stage("pairwise", opts, [&](Stage& st) {
        const auto& dims = pairwise_dims(opts);
        cov.pairwise.clear();
        json arr = json::array();
        std::size_t t = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j, ++t) {
                cov.pairwise.push_back(dims[t].h);
                json h = hilbert_json(dims[t].h);
                h["method"] = dims[t].method;
                h["pair"] = json::array({i + 1, j + 1});
                arr.push_back(h);
            }
        st.data = json{{"ideals", arr}};
        st.ok = std::all_of(cov.pairwise.begin(), cov.pairwise.end(), [](const HilbertData& h) { return h.dimension == 0; });
    }));

    cov.stages.push_back(run_stage("derivative_identity", opts, [&](Stage& st) {
        const auto dg = gradient(g);
        const auto dgk = gradient(gk);
        bool all = true;
        for (std::size_t i = 0; i < 4; ++i) {
            QPoly rhs = Rat(static_cast<long>(k)) * substitute_powers(dg[i], k);
            Monomial m;
            m[i] = k - 1;
            rhs = QPoly::monomial(gk.ring(), m, Rat(1)) * rhs;
            all = all && dgk[i] == rhs;
        }
        cov.derivative_identity = all;
        st.ok = all;
        st.data = json{{"k", k}, {"holds", all}};
    }));

    cov.stages.push_back(run_stage("hyperplane_avoidance", opts, [&](Stage& st) {
        const auto& [h, method] = hyperplane_meet(opts);
        cov.hyperplane_avoidance = h.dimension == -1;
        st.data = hilbert_json(h);
        st.data["method"] = method;
        st.ok = cov.hyperplane_avoidance;
    }));

    cov.stages.push_back(run_stage("coordinate_points", opts, [&](Stage& st) {
        const auto dgk = gradient(gk);
        json arr = json::array();
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<Rat> e(4, Rat(0));
            e[i] = 1;
            const bool on = is_zero(evaluate(gk, e));
            bool sing = on;
            for (const auto& d : dgk) sing = sing && is_zero(evaluate(d, e));
            arr.push_back(json{{"point", i + 1}, {"on_surface", on}, {"singular", sing}});
        }
        st.data = json{{"points", arr}};
        st.ok = true;
    }));

    cov.stages.push_back(run_stage("base_points", opts, [&](Stage& st) {
        cov.base_points = direct_points(opts).total_point_count;
        st.data = json{{"count", cov.base_points}};
        st.ok = cov.base_points > 0;
    }));

    cov.lower_bound = static_cast<std::uint64_t>(cov.base_points) * k * k * k;
    cov.irreducible = cov.status() == Status::Complete;
    cov.stages.push_back(miyaoka_stage(8ull * k, cov.lower_bound, opts));
    cov.anchors["b.k" + std::to_string(k) + ".bound"] = cov.lower_bound;
    return cov;
}

// ---- part (c) ---------------------------------------------------------------

CensusCertificate verify_part_c(const RunOptions& opts) {
    CensusCertificate cert;
    cert.scenario = "g[2]";
    const SurfaceScenario S = SurfaceScenario::load(2);
    const QPoly& g2 = S.poly;
    const auto grad = gradient(g2);

    std::uint64_t cover_points = 0;
    cert.stages.push_back(run_stage("cover", opts, [&](Stage& st) {
        const auto cov = cover_singular_containment(2, opts);
        cover_points = cov.lower_bound;
        st.data = json{{"k", 2}, {"points_in_torus", cover_points}, {"status", to_string(cov.status())}};
        st.ok = cov.status() == Status::Complete;
    }));

    struct Component {
        std::size_t hyperplane;
        ZeroDimComponent comp;
        SingularityReport rep;
    };
    std::vector<Component> comps;
    cert.stages.push_back(run_stage("hyperplane_slices", opts, [&](Stage& st) {
        const RingRef R3 = make_ring({"u", "v", "w"});
        std::vector<ZeroDimSolution> sols(4);
        parallel_for(opts.threads, 4, [&](std::size_t i) {
            std::vector<QPoly> images;
            std::size_t k = 0;
            for (std::size_t v = 0; v < 4; ++v)
                images.push_back(v == i ? QPoly::constant(R3, Rat(0)) : QPoly::variable(R3, k++));
            std::vector<QPoly> gens{compose(g2, images, R3)};
            for (const auto& d : grad) gens.push_back(compose(d, images, R3));
            sols[i] = projective_zero_dim_points(Ideal<Rat>(R3, gens));
            opts.note("slice x" + std::to_string(i + 1) + " = 0: " + std::to_string(sols[i].total_point_count) + " points");
        });
        // Each point is kept on the hyperplane of its first zero coordinate.
        for (std::size_t i = 0; i < 4; ++i)
            for (auto& c : sols[i].components) {
                std::vector<NFElem> full;
                std::size_t k = 0;
                for (std::size_t v = 0; v < 4; ++v) full.push_back(v == i ? NFElem::embed(c.field, Rat(0)) : c.point[k++]);
                std::size_t first = 0;
                while (!is_zero(full[first])) ++first;
                if (first != i) continue;
                c.point = std::move(full);
                comps.push_back({i, std::move(c), {}});
            }
        std::size_t total = 0;
        std::map<int, std::size_t> by_degree;
        for (const auto& c : comps) {
            total += static_cast<std::size_t>(c.comp.field->degree());
            ++by_degree[c.comp.field->degree()];
        }
        json degrees = json::array(), split = json::object();
        for (const auto& [d, n] : by_degree) {
            degrees.push_back(d);
            split[std::to_string(d)] = n;
        }
        st.data = json{{"points", total}, {"components", comps.size()}, {"residue_degrees", degrees}, {"split", split}};
        cert.anchors["c.hyperplane_points"] = total;
        cert.anchors["c.hyperplane_components"] = comps.size();
        cert.anchors["c.residue_degrees"] = degrees;
        st.ok = total > 0;
        st.detail = std::to_string(total) + " points in " + std::to_string(comps.size()) + " components";
    }));

    cert.stages.push_back(run_stage("classify_slices", opts, [&](Stage& st) {
        parallel_for(opts.threads, comps.size(), [&](std::size_t i) { comps[i].rep = classify_at(g2, comps[i].comp.point, 6); });
        json arr = json::array();
        bool ok = !comps.empty();
        std::map<std::string, std::size_t> counts;
        std::optional<std::size_t> degree8_milnor;
        for (const auto& c : comps) {
            const int deg = c.comp.field->degree();
            json j = report_json(c.rep);
            j["hyperplane"] = c.hyperplane + 1;
            j["residue_degree"] = deg;
            j["point"] = point_json(c.comp.point, c.comp.field);
            arr.push_back(std::move(j));
            counts[c.rep.type_name()] += static_cast<std::size_t>(deg);
            const bool simple = c.rep.type == SingularityType::A && c.rep.milnor == c.rep.tjurina;
            ok = ok && simple;
            if (deg == 8 && !degree8_milnor && c.rep.milnor) degree8_milnor = *c.rep.milnor;
        }
        st.data = json{{"components", arr}};
        for (const auto& [t, n] : counts) st.data["counts"][t] = n;
        cert.anchors["c.a1"] = counts.count("A1") ? counts["A1"] : 0;
        cert.anchors["c.a2"] = counts.count("A2") ? counts["A2"] : 0;
        if (degree8_milnor) cert.anchors["c.degree8_milnor"] = *degree8_milnor;
        st.ok = ok;
    }));

    cert.stages.push_back(run_stage("k8_consistency", opts, [&](Stage& st) {
        // Primes splitting K8 completely must split every degree-8 residue
        // field completely when those fields lie in K8; modular evidence only.
        const RatPoly k8 = data::k8_polynomial();
        std::size_t checked = 0;
        bool ok = true;
        for (std::uint64_t p = 1000003; checked < 20 && p < 100000000; p += 2) {
            if (!is_prime(p)) continue;
            if (modp::roots(k8, p).size() != static_cast<std::size_t>(k8.degree())) continue;
            ++checked;
            for (const auto& c : comps)
                if (c.comp.field->degree() == 8 && modp::roots(c.comp.field->modulus(), p).size() != 8) ok = false;
        }
        st.data = json{{"primes", checked}, {"consistent", ok}};
        st.ok = ok && checked > 0;
    }));

    cert.stages.push_back(run_stage("global_degree", opts, [&](Stage& st) {
        bool unanimous = false;
        cert.global = jacobian_degree(g2, opts, cert.global_method, unanimous);
        st.data = hilbert_json(*cert.global);
        st.data["method"] = cert.global_method;
        if (opts.mode == Mode::Modular) st.data["primes"] = primes_json(opts);
        cert.anchors["c.jacobian_degree"] = cert.global->degree.get_si();
        st.ok = unanimous && cert.global->dimension == 0;
        st.detail = "degree " + cert.global->degree.get_str() + " (" + cert.global_method + ")";
    }));

    cert.groups.push_back({static_cast<std::size_t>(cover_points), "D4", 4, std::nullopt, Provenance::Cover});
    std::map<std::pair<std::string, int>, std::pair<std::size_t, std::size_t>> agg;  // (type, degree) -> (count, tau)
    for (const auto& c : comps) {
        auto& slot = agg[{c.rep.type_name(), c.comp.field->degree()}];
        slot.first += static_cast<std::size_t>(c.comp.field->degree());
        slot.second = c.rep.tjurina.value_or(0);
    }
    for (const auto& [key, v] : agg)
        cert.groups.push_back({v.first, key.first, v.second, static_cast<std::size_t>(key.second), Provenance::HyperplaneSlice});
    cert.anchors["c.d4"] = cover_points;
    cert.stages.push_back(miyaoka_stage(16, cover_points, opts));
    cert.anchors["c.miyaoka_bound"] = miyaoka_bound(16);
    std::string claim = "exactly";
    for (const auto& g : cert.groups) claim += " " + std::to_string(g.count) + " " + g.type + ",";
    claim.pop_back();
    cert.claim = claim;
    return cert;
}

SingularityReport classify_point(const QPoly& f, const std::vector<NFElem>& point, std::uint32_t jet) {
    if (point.size() != f.nvars()) throw FieldMismatch("point dimension does not match the ring");
    if (f.is_homogeneous() && f.total_degree() > 0) return classify_at(f, point, jet);
    const RingRef ring = f.ring();
    std::vector<NFPoly> images;
    for (std::size_t v = 0; v < point.size(); ++v)
        images.push_back(NFPoly::variable(ring, v) + NFPoly::constant(ring, point[v]));
    return classify_germ([&](std::uint32_t J) { return compose(f, images, ring, std::uint64_t{J - 1}); }, jet);
}

// ---- serialization ----------------------------------------------------------

nlohmann::json to_json(const SingularityReport& r) {
    json j{{"corank", r.corank}, {"type", r.type_name()}};
    j["milnor"] = r.milnor ? json(*r.milnor) : json(nullptr);
    j["tjurina"] = r.tjurina ? json(*r.tjurina) : json(nullptr);
    if (r.evidence) j["cubic"] = to_string(*r.evidence);
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    return j;
}

nlohmann::json to_json(const CensusCertificate& cert) {
    json groups = json::array();
    for (const auto& g : cert.groups) {
        json j{{"count", g.count}, {"type", g.type}, {"tau", g.tau}, {"provenance", to_string(g.provenance)}};
        j["residue_degree"] = g.residue_degree ? json(*g.residue_degree) : json(nullptr);
        groups.push_back(std::move(j));
    }
    json stages = json::array();
    for (const auto& s : cert.stages)
        stages.push_back(json{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}, {"data", s.data}});
    json j{{"scenario", cert.scenario},
           {"claim", cert.claim},
           {"status", to_string(cert.status())},
           {"groups", groups},
           {"stages", stages},
           {"accounting", degree_accounting(cert)},
           {"anchors", cert.anchors}};
    j["global"] = cert.global ? hilbert_json(*cert.global) : json(nullptr);
    if (cert.global) j["global"]["method"] = cert.global_method;
    if (auto f = cert.failing_stage()) j["failing_stage"] = *f;
    return j;
}

nlohmann::json to_json(const CoverAnalysis& cov) {
    json stages = json::array();
    for (const auto& s : cov.stages)
        stages.push_back(json{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}, {"data", s.data}});
    return json{{"k", cov.k},
                {"status", to_string(cov.status())},
                {"stages", stages},
                {"hyperplane_avoidance", cov.hyperplane_avoidance},
                {"derivative_identity", cov.derivative_identity},
                {"irreducible", cov.irreducible},
                {"base_points", cov.base_points},
                {"lower_bound", cov.lower_bound},
                {"anchors", cov.anchors}};
}

const nlohmann::json& anchor_table() {
    static const json table = json::parse(data::anchors_text());
    return table;
}

std::vector<std::string> anchor_mismatches(const nlohmann::json& observed) {
    std::vector<std::string> out;
    const auto& table = anchor_table();
    for (const auto& [key, value] : observed.items()) {
        auto it = table.find(key);
        if (it == table.end() || *it != value) out.push_back(key);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace adesurf
