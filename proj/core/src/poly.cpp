#include "plonkc/poly.hpp"

#include <stdexcept>

namespace plonkc {

MultiPoly MultiPoly::constant(FieldElement v) {
    MultiPoly p(v.spec());
    p.add_term({}, v);
    return p;
}

MultiPoly MultiPoly::var(WireId w, const FieldSpec& spec) {
    MultiPoly p(spec);
    p.add_term({{w, 1}}, FieldElement(1, spec));
    return p;
}

std::size_t MultiPoly::degree() const {
    std::size_t deg = 0;
    for (const auto& [key, c] : terms_) {
        std::size_t d = 0;
        for (const auto& [w, e] : key) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

std::set<WireId> MultiPoly::vars() const {
    std::set<WireId> out;
    for (const auto& [key, c] : terms_) {
        for (const auto& [w, e] : key) out.insert(w);
    }
    return out;
}

void MultiPoly::add_term(const Key& k, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [key, c] : rhs.terms_) out.add_term(key, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [key, c] : rhs.terms_) out.add_term(key, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out(spec_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            Key k = ka;
            for (const auto& [w, e] : kb) k[w] += e;
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly out(spec_);
    for (const auto& [key, v] : terms_) out.add_term(key, v * c);
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    MultiPoly out = constant(FieldElement(1, spec_));
    for (std::uint32_t i = 0; i < e; ++i) out = out * *this;
    return out;
}

MultiPoly MultiPoly::substituted(WireId w, const MultiPoly& replacement) const {
    MultiPoly out(spec_);
    for (const auto& [key, c] : terms_) {
        auto it = key.find(w);
        if (it == key.end()) {
            out.add_term(key, c);
            continue;
        }
        Key rest = key;
        rest.erase(w);
        MultiPoly base(spec_);
        base.add_term(rest, c);
        out = out + base * replacement.pow(it->second);
    }
    return out;
}

MultiPoly MultiPoly::exponents_reduced(const std::set<WireId>& bool_vars) const {
    MultiPoly out(spec_);
    for (const auto& [key, c] : terms_) {
        Key reduced = key;
        for (auto& [w, e] : reduced) {
            if (e > 1 && bool_vars.count(w)) e = 1;
        }
        out.add_term(reduced, c);
    }
    return out;
}

FieldElement MultiPoly::eval(const std::map<WireId, FieldElement>& assignment) const {
    FieldElement acc(0, spec_);
    for (const auto& [key, c] : terms_) {
        FieldElement term = c;
        for (const auto& [w, e] : key) {
            auto it = assignment.find(w);
            if (it == assignment.end()) {
                throw std::out_of_range("no value for variable " + std::to_string(w));
            }
            term = term * it->second.pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

FieldElement MultiPoly::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? FieldElement(0, spec_) : it->second;
}

}  // namespace plonkc
