#include "adesurf/mpoly/text.hpp"

#include <cctype>

namespace adesurf {

std::string format_monomial(const Monomial& m, const PolyRing& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.names()[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

namespace {

// Recursive-descent parser shared by the Q and number-field entry points.
// Coefficients are accumulated as NFElem; a null field keeps them rational.
class Parser {
public:
    Parser(std::string_view text, const PolyRing& ring, FieldRef field)
        : s_(text), ring_(ring), field_(std::move(field)) {}

    std::vector<std::pair<Monomial, NFElem>> parse_all() {
        skip_ws();
        if (pos_ == s_.size()) throw SyntaxError("empty polynomial", pos_);
        auto terms = parse_sum(false);
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return terms;
    }

private:
    std::vector<std::pair<Monomial, NFElem>> parse_sum(bool nested) {
        std::vector<std::pair<Monomial, NFElem>> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        for (;;) {
            auto t = parse_term();
            if (negative) t.second = -t.second;
            terms.push_back(std::move(t));
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
                continue;
            }
            if (nested && c == ')') break;
            if (c == '\0') break;
            throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
        }
        return terms;
    }

    std::pair<Monomial, NFElem> parse_term() {
        Monomial m;
        NFElem coeff(1);
        for (;;) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * NFElem(parse_number());
            } else if (c == '(') {
                coeff = coeff * parse_paren();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t at = pos_;
                std::string name = parse_identifier();
                std::uint32_t e = parse_exponent();
                if (auto idx = ring_.index_of(name)) {
                    m = m * Monomial::variable(*idx, e);
                } else if (field_ && name == field_->generator_name()) {
                    coeff = coeff * NFElem::generator(field_).pow(e);
                } else {
                    throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(at));
                }
            } else {
                throw SyntaxError(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'", pos_);
            }
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        return {m, coeff};
    }

    NFElem parse_paren() {
        std::size_t open = pos_++;
        if (!field_) throw SyntaxError("parenthesized coefficient without a number field", open);
        // Inside parentheses only the field generator may appear.
        PolyRing gen_ring({field_->generator_name()});
        Parser inner(s_, gen_ring, nullptr);
        inner.pos_ = pos_;
        auto terms = inner.parse_sum(true);
        pos_ = inner.pos_;
        if (peek() != ')') throw SyntaxError("missing ')'", pos_);
        ++pos_;
        NFElem v(0);
        const NFElem t = NFElem::generator(field_);
        for (auto& [mono, c] : terms) v = v + c * t.pow(mono[0]);
        if (peek() == '^') {
            ++pos_;
            v = v.pow(parse_uint());
        }
        return v;
    }

    Rat parse_number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected denominator", pos_);
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        try {
            return parse_rat(s_.substr(start, pos_ - start));
        } catch (const SyntaxError&) {
            throw SyntaxError("malformed number", start);
        }
    }

    std::string parse_identifier() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint32_t parse_exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        return parse_uint();
    }

    std::uint32_t parse_uint() {
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (v > 0xFFFFFFFFull) throw ExponentOverflow("exponent exceeds 32 bits");
        }
        if (pos_ == start) throw SyntaxError("expected exponent", pos_);
        return static_cast<std::uint32_t>(v);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string_view s_;
    const PolyRing& ring_;
    FieldRef field_;
    std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, const RingRef& ring) {
    auto terms = Parser(text, *ring, nullptr).parse_all();
    std::vector<QPoly::Term> out;
    out.reserve(terms.size());
    for (auto& [m, c] : terms) out.emplace_back(m, c.to_rat());
    return QPoly::from_terms(ring, std::move(out));
}

NFPoly parse_poly(std::string_view text, const RingRef& ring, const FieldRef& field) {
    auto terms = Parser(text, *ring, field).parse_all();
    return NFPoly::from_terms(ring, std::move(terms));
}

NFElem parse_field_element(std::string_view text, const FieldRef& field) {
    static const RingRef unit = make_ring({"_"});
    NFPoly p = parse_poly(text, unit, field);
    for (const auto& [m, c] : p.terms())
        if (m.degree() != 0) throw SyntaxError("field element may only use the generator", 0);
    return p.is_zero() ? NFElem::embed(field, Rat(0)) : p.terms()[0].second;
}

}  // namespace adesurf
