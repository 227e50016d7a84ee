#include <algorithm>

#include "adesurf/digest.hpp"
#include "adesurf/exactnum/factor.hpp"
#include "adesurf/groebner/groebner.hpp"

namespace adesurf {

namespace gb {

std::string ideal_digest(const std::vector<std::string>& generator_texts) {
    std::string joined;
    for (const auto& t : generator_texts) joined += t + "\n";
    return sha256_hex(joined).substr(0, 16);
}

}  // namespace gb

namespace {

template <class K, class Conv>
std::vector<Monomial> leading_mod_p(const Ideal<K>& I, std::uint64_t p, const MonomialOrder& ord, Conv conv,
                                    gb::ProgressFn progress) {
    gb::ModField field(p);
    gb::Engine<gb::ModField> eng(field, ord);
    if (progress) eng.set_progress(std::move(progress));
    std::vector<gb::EPoly<std::uint32_t>> gens;
    for (const auto& g : I.gens) {
        auto e = gb::to_engine<gb::ModField>(g, eng.keyer(), conv);
        // drop coefficients that vanish mod p
        gb::EPoly<std::uint32_t> clean;
        clean.sugar = e.sugar;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e.c[i]) {
                clean.m.push_back(e.m[i]);
                clean.c.push_back(e.c[i]);
            }
        // a vanishing leading coefficient changes the leading structure
        if (clean.empty() || !(clean.lm() == e.lm())) throw BadPrime("leading coefficient vanishes modulo p");
        gens.push_back(std::move(clean));
    }
    auto basis = eng.run(std::move(gens));
    std::vector<Monomial> lead;
    for (const auto& b : basis) lead.push_back(eng.keyer().to_monomial(b.lm()));
    return lead;
}

std::uint32_t rat_mod(const Rat& c, std::uint64_t p) {
    auto r = reduce_mod(c, p);
    if (!r) throw BadPrime("denominator divisible by p");
    return static_cast<std::uint32_t>(*r);
}

}  // namespace

std::vector<Monomial> modular_leading_monomials(const Ideal<Rat>& I, std::uint64_t p, const MonomialOrder& ord,
                                                gb::ProgressFn progress) {
    return leading_mod_p(I, p, ord, [p](const Rat& c) { return rat_mod(c, p); }, std::move(progress));
}

HilbertData modular_mirror(const Ideal<Rat>& I, std::uint64_t p, gb::ProgressFn progress) {
    if (!I.is_homogeneous()) throw NotHomogeneous("Hilbert data needs a homogeneous ideal");
    auto lead = modular_leading_monomials(I, p, MonomialOrder::grevlex(I.ring->nvars()), std::move(progress));
    return projective_hilbert(lead, I.ring->nvars());
}

HilbertData modular_mirror(const Ideal<NFElem>& I, std::uint64_t p, gb::ProgressFn progress) {
    if (!I.is_homogeneous()) throw NotHomogeneous("Hilbert data needs a homogeneous ideal");
    FieldRef field;
    for (const auto& g : I.gens)
        for (const auto& [m, c] : g.terms())
            if (c.field()) field = c.field();
    std::uint64_t root = 0;
    if (field) {
        auto roots = modp::roots(field->modulus(), p);
        if (roots.empty()) throw BadPrime("field modulus has no root modulo p");
        root = roots.front();
    }
    auto conv = [root, p](const NFElem& c) { return static_cast<std::uint32_t>(c.reduce_mod_p(root, p)); };
    auto lead = leading_mod_p(I, p, MonomialOrder::grevlex(I.ring->nvars()), conv, std::move(progress));
    return projective_hilbert(lead, I.ring->nvars());
}

}  // namespace adesurf
