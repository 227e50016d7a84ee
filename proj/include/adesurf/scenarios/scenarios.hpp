#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adesurf/groebner/hilbert.hpp"
#include "adesurf/localsing/localsing.hpp"
#include "adesurf/mpoly/mpoly.hpp"

namespace adesurf {

enum class Mode { Exact, Modular };
std::string to_string(Mode m);

/// First three primes = 1 mod 12 above 10^6.
std::vector<std::uint64_t> default_primes();

struct RunOptions {
    Mode mode = Mode::Modular;
    std::vector<std::uint64_t> primes = default_primes();
    unsigned threads = 1;
    /// Heartbeat lines; never part of a certificate.
    std::function<void(const std::string&)> progress;

    void note(const std::string& line) const {
        if (progress) progress(line);
    }
};

/// floor(16 d (d-1)^2 / 117).
std::uint64_t miyaoka_bound(std::uint64_t d);

/// Z(g[k]) with its defining form; load() re-checks homogeneity, the
/// degree 8k and the Euler identity.
struct SurfaceScenario {
    std::string name;
    QPoly poly;
    unsigned k = 1;

    static SurfaceScenario load(unsigned k);
};

enum class Provenance { Orbit, Pushforward, HyperplaneSlice, Cover, Direct };
std::string to_string(Provenance p);

struct PointGroup {
    std::size_t count = 0;
    std::string type;                           // "D4", "A2", ...
    std::size_t tau = 0;                        // Tjurina number of each point
    std::optional<std::size_t> residue_degree;  // nullopt when no coordinates exist
    Provenance provenance = Provenance::Direct;
};

enum class Status { Complete, Incomplete };
std::string to_string(Status s);

struct Stage {
    std::string name;
    bool ok = false;
    std::string detail;
    nlohmann::json data = nlohmann::json::object();
};

struct CensusCertificate {
    std::string scenario;
    std::string claim;
    std::optional<HilbertData> global;
    std::string global_method;
    std::vector<PointGroup> groups;
    std::vector<Stage> stages;
    /// Observed values of anchored quantities, keyed as in docs/anchors.json.
    nlohmann::json anchors = nlohmann::json::object();

    Status status() const;
    /// First stage that did not pass, or "accounting".
    std::optional<std::string> failing_stage() const;
};

/// Sum of count * tau over the point groups equals the global degree.
bool degree_accounting(const CensusCertificate& cert);

struct CoverAnalysis {
    unsigned k = 1;
    std::vector<Stage> stages;
    std::vector<HilbertData> pairwise;  // (i, j) in lexicographic order
    bool hyperplane_avoidance = false;
    bool derivative_identity = false;
    bool irreducible = false;
    std::size_t base_points = 0;        // singular points of Z(g)
    std::uint64_t lower_bound = 0;      // base_points * k^3
    nlohmann::json anchors = nlohmann::json::object();

    Status status() const;
};

CensusCertificate verify_part_a(const RunOptions& opts);
CoverAnalysis cover_singular_containment(unsigned k, const RunOptions& opts);
CensusCertificate verify_part_c(const RunOptions& opts);
CensusCertificate verify_part_d(const RunOptions& opts);

/// ADE classification of a hypersurface at a point. A homogeneous f with
/// one coordinate per variable is read projectively, in the chart of the
/// last nonzero coordinate; otherwise the point is affine. The germ is
/// expanded below degree `jet`, escalating to the jet cap when needed.
SingularityReport classify_point(const QPoly& f, const std::vector<NFElem>& point, std::uint32_t jet = 8);

/// Canonical JSON bodies (no schema header; the CLI adds it).
nlohmann::json to_json(const CensusCertificate& cert);
nlohmann::json to_json(const CoverAnalysis& cover);
nlohmann::json to_json(const SingularityReport& report);

/// docs/anchors.json as compiled in.
const nlohmann::json& anchor_table();

/// Keys whose observed value differs from the anchor table, sorted.
std::vector<std::string> anchor_mismatches(const nlohmann::json& observed);

}  // namespace adesurf
