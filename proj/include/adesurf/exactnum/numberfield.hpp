#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adesurf/exactnum/factor.hpp"
#include "adesurf/exactnum/rat.hpp"
#include "adesurf/exactnum/upoly.hpp"

namespace adesurf {

class NumberField;
using FieldRef = std::shared_ptr<const NumberField>;

/// Q[t]/(f) for a monic irreducible f, presented in the power basis.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Verifies that `modulus` is monic of degree >= 1 and irreducible over
    /// Q; throws ReduciblePolynomial listing the factors otherwise.
    static FieldRef create(const RatPoly& modulus, std::string generator = "t", std::string label = "");

    /// Q(zeta_n) with generator name `generator`.
    static FieldRef cyclotomic(unsigned n, std::string generator = "z");

    const RatPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    const std::string& generator_name() const { return gen_; }
    const std::string& label() const { return label_; }

    /// Structural identity: same modulus.
    bool same_as(const NumberField& other) const { return this == &other || modulus_ == other.modulus_; }

    /// Reduces a coefficient vector of arbitrary length modulo the modulus.
    std::vector<Rat> reduce(std::vector<Rat> coeffs) const;

    /// Product in the power basis.
    std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

private:
    NumberField(RatPoly modulus, std::string gen, std::string label);

    RatPoly modulus_;
    std::string gen_;
    std::string label_;
    // t^k mod f for k = d .. 2d-2, each of length d.
    std::vector<std::vector<Rat>> high_powers_;
};

/// Element of a number field, or a bare rational when no field is attached.
///
/// Bare rationals combine with elements of any field; two elements attached
/// to structurally different fields raise FieldMismatch.
class NFElem {
public:
    NFElem() : c_(1) {}
    NFElem(int v) : c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
    NFElem(const Rat& v) : c_{v} {}  // NOLINT(google-explicit-constructor)
    NFElem(FieldRef field, std::vector<Rat> coords);

    static NFElem generator(const FieldRef& field);
    static NFElem embed(const FieldRef& field, const Rat& v);

    const FieldRef& field() const { return field_; }
    /// Power-basis coordinates; length = field degree (1 for bare rationals).
    const std::vector<Rat>& coords() const { return c_; }
    bool is_rational() const;
    /// The rational value; throws Error when the element is not in Q.
    Rat to_rat() const;

    friend bool is_zero(const NFElem& x);
    friend bool operator==(const NFElem& a, const NFElem& b);

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
    NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
    NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
    NFElem& operator/=(const NFElem& o) { return *this = *this / o; }

    /// Multiplicative inverse; throws DivisionByZero for 0.
    NFElem inverse() const;
    NFElem pow(unsigned e) const;

    /// Polynomial in the generator, e.g. "z^3 + 2*z - 1/3".
    std::string to_string() const;

    /// Exact image in F_p under t -> root; throws BadPrime on a denominator hit.
    std::uint64_t reduce_mod_p(std::uint64_t root, std::uint64_t p) const;

private:
    static FieldRef common_field(const NFElem& a, const NFElem& b);
    std::vector<Rat> lifted(const FieldRef& f) const;

    FieldRef field_;
    std::vector<Rat> c_;
};

bool is_zero(const NFElem& x);

/// Sign-split rendering used by the polynomial formatter.
std::string coefficient_string(const NFElem& x, bool& negative);

/// Reducible-polynomial error text listing the factors.
std::string describe_factors(const std::vector<FactorPower>& factors);

}  // namespace adesurf
