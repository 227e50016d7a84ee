#include "adesurf/exactnum/rat.hpp"

#include <cctype>

#include "adesurf/errors.hpp"

namespace adesurf {

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) throw SyntaxError("malformed rational '" + std::string(text) + "'", 0);
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    Rat r;
    r.get_num() = Integer(n, 10);
    r.get_den() = Integer(std::string(den), 10);
    if (r.get_den() == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace adesurf
