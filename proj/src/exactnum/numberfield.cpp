#include "adesurf/exactnum/numberfield.hpp"

#include "adesurf/errors.hpp"
#include "adesurf/exactnum/modular.hpp"

namespace adesurf {

std::string format_coefficient_term(const std::string& coeff, bool negative, bool first, const std::string& mono) {
    std::string out;
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (mono.empty()) return out + coeff;
    if (coeff != "1") out += coeff + "*";
    return out + mono;
}

std::string describe_factors(const std::vector<FactorPower>& factors) {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += " * ";
        s += "(" + f.factor.to_string() + ")";
        if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
    }
    return s;
}

NumberField::NumberField(RatPoly modulus, std::string gen, std::string label)
    : modulus_(std::move(modulus)), gen_(std::move(gen)), label_(std::move(label)) {
    const int d = modulus_.degree();
    // t^d = -(lower part); build successive powers by shifting.
    std::vector<Rat> cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -modulus_[static_cast<std::size_t>(i)];
    for (int k = d; k <= 2 * d - 2; ++k) {
        high_powers_.push_back(cur);
        std::vector<Rat> next(static_cast<std::size_t>(d));
        for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        const Rat top = cur[static_cast<std::size_t>(d - 1)];
        if (top != 0)
            for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] -= top * modulus_[static_cast<std::size_t>(i)];
        cur = std::move(next);
    }
}

FieldRef NumberField::create(const RatPoly& modulus, std::string generator, std::string label) {
    if (modulus.degree() < 1) throw ReduciblePolynomial("number field modulus must have degree >= 1");
    if (modulus.lead() != 1) throw ReduciblePolynomial("number field modulus must be monic");
    auto factors = factor_rational_upoly(modulus);
    if (factors.size() != 1 || factors[0].multiplicity != 1)
        throw ReduciblePolynomial("modulus " + modulus.to_string() + " factors as " + describe_factors(factors));
    if (label.empty()) label = "Q[" + generator + "]/(" + modulus.to_string(generator) + ")";
    return FieldRef(new NumberField(modulus, std::move(generator), std::move(label)));
}

FieldRef NumberField::cyclotomic(unsigned n, std::string generator) {
    return create(cyclotomic_polynomial(n), std::move(generator), "Q(zeta_" + std::to_string(n) + ")");
}

std::vector<Rat> NumberField::reduce(std::vector<Rat> coeffs) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    if (coeffs.size() <= d) {
        coeffs.resize(d);
        return coeffs;
    }
    if (coeffs.size() <= 2 * d - 1) {
        std::vector<Rat> out(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(d));
        for (std::size_t k = d; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const auto& row = high_powers_[k - d];
            for (std::size_t i = 0; i < d; ++i)
                if (row[i] != 0) out[i] += coeffs[k] * row[i];
        }
        return out;
    }
    RatPoly r = RatPoly(std::move(coeffs)) % modulus_;
    std::vector<Rat> out = r.coeffs();
    out.resize(d);
    return out;
}

std::vector<Rat> NumberField::multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    std::vector<Rat> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    return reduce(std::move(prod));
}

// ---------------------------------------------------------------------------

NFElem::NFElem(FieldRef field, std::vector<Rat> coords) : field_(std::move(field)), c_(std::move(coords)) {
    if (field_) {
        c_ = field_->reduce(std::move(c_));
    } else if (c_.size() != 1) {
        c_.resize(1);
    }
}

NFElem NFElem::generator(const FieldRef& field) {
    if (field->degree() == 1) return NFElem(field, {-field->modulus()[0]});
    return NFElem(field, {Rat(0), Rat(1)});
}

NFElem NFElem::embed(const FieldRef& field, const Rat& v) { return NFElem(field, {v}); }

bool NFElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat NFElem::to_rat() const {
    if (!is_rational()) throw Error("number field element is not rational: " + to_string());
    return c_[0];
}

bool is_zero(const NFElem& x) {
    for (const auto& c : x.c_)
        if (c != 0) return false;
    return true;
}

FieldRef NFElem::common_field(const NFElem& a, const NFElem& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (!a.field_->same_as(*b.field_))
        throw FieldMismatch("elements of " + a.field_->label() + " and " + b.field_->label() + " cannot be combined");
    return a.field_;
}

std::vector<Rat> NFElem::lifted(const FieldRef& f) const {
    if (!f || field_) return c_;
    std::vector<Rat> v(static_cast<std::size_t>(f->degree()));
    v[0] = c_[0];
    return v;
}

bool operator==(const NFElem& a, const NFElem& b) {
    FieldRef f = NFElem::common_field(a, b);
    return a.lifted(f) == b.lifted(f);
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    FieldRef f = NFElem::common_field(a, b);
    std::vector<Rat> v = a.lifted(f);
    const std::vector<Rat> w = b.lifted(f);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    NFElem out;
    out.field_ = f;
    out.c_ = std::move(v);
    return out;
}

NFElem operator-(const NFElem& a) {
    NFElem out = a;
    for (auto& c : out.c_) c = -c;
    return out;
}

NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

NFElem operator*(const NFElem& a, const NFElem& b) {
    FieldRef f = NFElem::common_field(a, b);
    NFElem out;
    out.field_ = f;
    if (!a.field_ || !b.field_) {
        const NFElem& scalar = a.field_ ? b : a;
        const NFElem& other = a.field_ ? a : b;
        out.c_ = other.c_;
        for (auto& c : out.c_) c *= scalar.c_[0];
        return out;
    }
    out.c_ = f->multiply(a.c_, b.c_);
    return out;
}

NFElem NFElem::inverse() const {
    if (is_zero(*this)) throw DivisionByZero("inverse of zero in " + (field_ ? field_->label() : std::string("Q")));
    if (!field_) return NFElem(Rat(1) / c_[0]);
    // Extended Euclid: s * a + u * f = 1.
    RatPoly a(c_), b = field_->modulus();
    RatPoly s0 = RatPoly::constant(Rat(1)), s1;
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        RatPoly s2 = s0 - q * s1;
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // a is a nonzero constant since the modulus is irreducible.
    Rat inv_c = Rat(1) / a[0];
    std::vector<Rat> v = s0.coeffs();
    for (auto& c : v) c *= inv_c;
    return NFElem(field_, std::move(v));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem NFElem::pow(unsigned e) const {
    NFElem result = field_ ? embed(field_, Rat(1)) : NFElem(1);
    NFElem base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string NFElem::to_string() const {
    const std::string gen = field_ ? field_->generator_name() : "t";
    return RatPoly(c_).to_string(gen);
}

std::uint64_t NFElem::reduce_mod_p(std::uint64_t root, std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        auto v = reduce_mod(c_[i], p);
        if (!v) throw BadPrime("prime " + std::to_string(p) + " divides a denominator");
        acc = (acc * root + *v) % p;
    }
    return acc;
}

std::string coefficient_string(const NFElem& x, bool& negative) {
    negative = false;
    if (x.is_rational()) return coefficient_string(x.coords()[0], negative);
    return "(" + x.to_string() + ")";
}

}  // namespace adesurf
