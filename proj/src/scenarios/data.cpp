#include "adesurf/scenarios/data.hpp"

#include <sstream>
#include <string>

#include "adesurf/mpoly/ops.hpp"
#include "adesurf/mpoly/text.hpp"

namespace adesurf::data {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : line) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// Entries are written in a = z^4.
NFElem parse_entry(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c == 'a')
            s += "(z^4)";
        else
            s += c;
    }
    return parse_field_element(s, cyclotomic12());
}

}  // namespace

QPoly g() {
    static const QPoly p = parse_poly(g_text(), projective_ring());
    return p;
}

QPoly g_power(unsigned k) {
    QPoly p = substitute_powers(g(), k);
    if (!p.is_homogeneous() || p.total_degree() != static_cast<long>(8 * k))
        throw Error("g[k] is not homogeneous of degree 8k");
    return p;
}

std::vector<GroupMatrix> w_generators() {
    std::vector<GroupMatrix> out;
    Matrix<NFElem> rows;
    auto flush = [&] {
        if (rows.empty()) return;
        out.push_back(GroupMatrix::from_matrix(rows));
        rows.clear();
    };
    std::istringstream in{std::string(w_generators_text())};
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) {
            flush();
            continue;
        }
        std::vector<NFElem> row;
        for (const auto& e : split(line, ',')) row.push_back(parse_entry(e));
        rows.push_back(std::move(row));
    }
    flush();
    return out;
}

ProjectivePoint seed_point() {
    std::vector<NFElem> c;
    for (const auto& e : split(trim(std::string(seed_point_text())), ',')) c.push_back(parse_field_element(e, cyclotomic12()));
    return ProjectivePoint(std::move(c));
}

RatPoly k8_polynomial() {
    const QPoly p = parse_poly(trim(std::string(k8_text())), make_ring({"T"}));
    std::vector<Rat> c(static_cast<std::size_t>(p.total_degree()) + 1, Rat(0));
    for (const auto& [m, v] : p.terms()) c[m[0]] = v;
    return RatPoly(std::move(c));
}

}  // namespace adesurf::data
