#include "plonkc/gadgets.hpp"

#include <stdexcept>

namespace plonkc {

Repr chained_add(Env& env, Repr i1, Repr i2, Repr i3) {
    Repr m = env.mul(i1, i2);
    return env.add(m, i3);
}

Repr xor_gadget(Env& env, Repr a, Repr b) { return env.logic_xor(a, b); }

std::vector<Repr> toy_poseidon_round(Env& env, const std::vector<Repr>& state,
                                     const std::vector<FieldElement>& round_constants) {
    if (state.size() != 3 || round_constants.size() != 3) {
        throw std::invalid_argument("toy_poseidon_round expects state width 3");
    }
    const FieldSpec spec = env.spec();
    FieldElement one(1, spec), two(2, spec);
    std::vector<Repr> sboxed;
    for (std::size_t i = 0; i < 3; ++i) {
        Repr t = env.affine(state[i], one, round_constants[i]);
        Repr a2 = env.mul(t, t);
        Repr a4 = env.mul(a2, a2);
        sboxed.push_back(env.mul(a4, t));
    }
    // Circulant MDS mix, rows (2,1,1), (1,2,1), (1,1,2).
    std::vector<Repr> out;
    for (std::size_t row = 0; row < 3; ++row) {
        std::vector<FieldElement> coeffs = {one, one, one};
        coeffs[row] = two;
        out.push_back(env.reduce_terms(coeffs, sboxed));
    }
    return out;
}

Repr sha_expansion_step(Env& env, Repr a, Repr b, Repr c, Repr d) {
    FieldElement one(1, env.spec());
    // Defensive 32-bit checks on every operand: the step is safe to call on
    // untrusted words, and the optimizer deduplicates repeats across a loop.
    for (Repr w : {a, b, c, d}) env.range_check_n(w, 32);
    Repr sum = env.reduce_terms({one, one, one, one}, {a, b, c, d});
    return env.range_check_n(sum, 36).low;
}

std::vector<std::string> gadget_ids() {
    return {"chained_add", "xor", "is_zero_demo", "toy_poseidon_round", "sha_expansion_step"};
}

namespace {

BuiltGadget make_chained_add(const FieldSpec& spec) {
    Env env(spec);
    Repr i1 = env.input(), i2 = env.input(), i3 = env.input();
    Repr out = chained_add(env, i1, i2, i3);
    BuiltGadget g;
    g.name = "chained_add";
    g.built = env.finish({out});
    g.reference = [](const std::vector<FieldElement>& in) {
        return std::vector<FieldElement>{in.at(0) * in.at(1) + in.at(2)};
    };
    return g;
}

BuiltGadget make_xor(const FieldSpec& spec) {
    Env env(spec);
    Repr a = env.input_bool(), b = env.input_bool();
    Repr out = xor_gadget(env, a, b);
    BuiltGadget g;
    g.name = "xor";
    g.built = env.finish({out});
    FieldSpec s = spec;
    g.reference = [s](const std::vector<FieldElement>& in) {
        return std::vector<FieldElement>{
            FieldElement(in.at(0).value() ^ in.at(1).value(), s)};
    };
    return g;
}

BuiltGadget make_is_zero_demo(const FieldSpec& spec) {
    Env env(spec);
    Repr x = env.input();
    Repr out = env.is_zero(x);
    BuiltGadget g;
    g.name = "is_zero_demo";
    g.built = env.finish({out});
    FieldSpec s = spec;
    g.reference = [s](const std::vector<FieldElement>& in) {
        return std::vector<FieldElement>{FieldElement(in.at(0).is_zero() ? 1 : 0, s)};
    };
    return g;
}

BuiltGadget make_toy_poseidon_round(const FieldSpec& spec) {
    Env env(spec);
    std::vector<Repr> state = {env.input(), env.input(), env.input()};
    std::vector<FieldElement> rc = {FieldElement(1, spec), FieldElement(2, spec),
                                    FieldElement(3, spec)};
    std::vector<Repr> out = toy_poseidon_round(env, state, rc);
    BuiltGadget g;
    g.name = "toy_poseidon_round";
    g.built = env.finish(out);
    FieldSpec s = spec;
    g.reference = [s, rc](const std::vector<FieldElement>& in) {
        std::vector<FieldElement> a5;
        for (std::size_t i = 0; i < 3; ++i) a5.push_back((in.at(i) + rc[i]).pow(5));
        FieldElement two(2, s);
        std::vector<FieldElement> out_vals;
        for (std::size_t row = 0; row < 3; ++row) {
            FieldElement acc(0, s);
            for (std::size_t i = 0; i < 3; ++i) {
                acc = acc + (i == row ? two * a5[i] : a5[i]);
            }
            out_vals.push_back(acc);
        }
        return out_vals;
    };
    return g;
}

BuiltGadget make_sha_expansion(const FieldSpec& spec) {
    Env env(spec);
    std::vector<Repr> window = {env.input_u32(), env.input_u32(), env.input_u32(),
                                env.input_u32()};
    Repr last;
    for (int step = 0; step < 16; ++step) {
        Repr next = sha_expansion_step(env, window[0], window[1], window[2], window[3]);
        window = {window[1], window[2], window[3], next};
        last = next;
    }
    BuiltGadget g;
    g.name = "sha_expansion_step";
    g.built = env.finish({last});
    FieldSpec s = spec;
    g.reference = [s](const std::vector<FieldElement>& in) {
        std::vector<FieldElement> w;
        for (const auto& v : in) w.push_back(v);
        for (int step = 0; step < 16; ++step) {
            FieldElement sum = w[0] + w[1] + w[2] + w[3];
            FieldElement low(sum.value() & 0xffffffffull, s);
            w = {w[1], w[2], w[3], low};
        }
        return std::vector<FieldElement>{w[3]};
    };
    return g;
}

}  // namespace

BuiltGadget build_gadget(const std::string& id, const FieldSpec& spec) {
    if (id == "chained_add") return make_chained_add(spec);
    if (id == "xor") return make_xor(spec);
    if (id == "is_zero_demo") return make_is_zero_demo(spec);
    if (id == "toy_poseidon_round") return make_toy_poseidon_round(spec);
    if (id == "sha_expansion_step") return make_sha_expansion(spec);
    throw std::invalid_argument("unknown gadget: " + id);
}

}  // namespace plonkc
