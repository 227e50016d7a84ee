#pragma once

#include <string>
#include <string_view>

#include "adesurf/mpoly/mpoly.hpp"

namespace adesurf {

/// "x1^6*x2^2"; empty for the unit monomial.
std::string format_monomial(const Monomial& m, const PolyRing& ring);

/// Canonical text: grevlex-descending terms joined by " + " / " - ".
template <class K>
std::string format_poly(const MPoly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = false;
        std::string cs = coefficient_string(c, negative);
        out += format_coefficient_term(cs, negative, first, format_monomial(m, *p.ring()));
        first = false;
    }
    return out;
}

/// Parses the polynomial grammar over Q. Throws SyntaxError or UnknownVariable.
QPoly parse_poly(std::string_view text, const RingRef& ring);

/// Same grammar over a number field; parenthesized coefficients are
/// polynomials in the field generator.
NFPoly parse_poly(std::string_view text, const RingRef& ring, const FieldRef& field);

/// A standalone field element such as "2*z^3 - z + 1".
NFElem parse_field_element(std::string_view text, const FieldRef& field);

}  // namespace adesurf
