#include "plonkc/optimizer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "plonkc/poly.hpp"

namespace plonkc {

namespace {

std::set<WireId> defined_set(const std::vector<GateInstance>& gates) {
    std::set<WireId> out;
    for (const auto& g : gates) {
        for (WireId w : g.defined_wires()) out.insert(w);
    }
    return out;
}

bool same_gate(const GateInstance& a, const GateInstance& b) {
    return a.op == b.op && a.inputs == b.inputs && a.aux == b.aux && a.outputs == b.outputs &&
           a.constants == b.constants && a.table == b.table && a.chunk_count == b.chunk_count &&
           a.chunk_bits == b.chunk_bits;
}

// Output value of a total single-output gate under the given assignment.
FieldElement eval_gate(const GateInstance& g, const std::map<WireId, FieldElement>& vals,
                       const FieldSpec& spec) {
    auto at = [&](WireId w) { return vals.at(w); };
    switch (g.op) {
        case GateOp::Arith: {
            const auto& q = g.constants;
            FieldElement l = at(g.inputs[0]), r = at(g.inputs[1]);
            return -(q[0] * l + q[1] * r + q[3] * l * r + q[4]) * q[2].inv();
        }
        case GateOp::Fma:
            return g.constants[0] * at(g.inputs[0]) * at(g.inputs[1]) +
                   g.constants[1] * at(g.inputs[2]);
        case GateOp::LinComb: {
            FieldElement acc(0, spec);
            for (std::size_t i = 0; i < g.inputs.size(); ++i) {
                acc = acc + g.constants[i] * at(g.inputs[i]);
            }
            return acc;
        }
        default:
            throw std::logic_error("eval_gate: unsupported op");
    }
}

// Wires provably boolean without relying on any check that the optimizer is
// allowed to remove: assumed input facts, isZero outputs, 0/1 constants,
// boolean checks that survive every pass, closed under gates that map
// boolean inputs to boolean outputs. With include_all_bool_checks every
// present BoolCheck counts (used by the discipline audit, which only asks
// whether a constraint exists, not whether it is droppable).
std::set<WireId> strong_facts(const std::vector<GateInstance>& gates, const PassContext& ctx,
                              bool include_all_bool_checks = false) {
    const std::set<WireId> defined = defined_set(gates);
    std::set<WireId> facts = ctx.assumed_bool;
    for (const auto& g : gates) {
        switch (g.op) {
            case GateOp::IsZero:
                facts.insert(g.outputs[0]);
                break;
            case GateOp::Constant:
                if (g.constants[0].value() <= 1) facts.insert(g.outputs[0]);
                break;
            case GateOp::BoolCheck:
                if (include_all_bool_checks || !defined.count(g.inputs[0])) {
                    facts.insert(g.inputs[0]);
                }
                break;
            default:
                break;
        }
    }
    // Symbolic closure: track each wire as a polynomial over fact
    // variables so booleanness survives non-boolean intermediates
    // (e.g. o = u - 2ab with u = a + b).
    std::map<WireId, MultiPoly> polys;
    for (const auto& g : gates) {
        if (g.op == GateOp::Constant) polys.emplace(g.outputs[0], MultiPoly::constant(g.constants[0]));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : gates) {
            if (g.op != GateOp::Arith && g.op != GateOp::Fma && g.op != GateOp::LinComb) continue;
            WireId out = g.outputs[0];
            if (polys.count(out)) continue;
            std::vector<MultiPoly> in;
            bool ready = true;
            for (WireId w : g.inputs) {
                if (auto it = polys.find(w); it != polys.end()) {
                    in.push_back(it->second);
                } else if (facts.count(w)) {
                    in.push_back(MultiPoly::var(w, ctx.spec));
                } else {
                    ready = false;
                    break;
                }
            }
            if (!ready) continue;
            MultiPoly cand(ctx.spec);
            switch (g.op) {
                case GateOp::Arith: {
                    const auto& q = g.constants;
                    FieldElement s = -q[2].inv();
                    cand = (in[0].scaled(q[0]) + in[1].scaled(q[1]) +
                            (in[0] * in[1]).scaled(q[3]) + MultiPoly::constant(q[4]))
                               .scaled(s);
                    break;
                }
                case GateOp::Fma:
                    cand = (in[0] * in[1]).scaled(g.constants[0]) + in[2].scaled(g.constants[1]);
                    break;
                default:
                    for (std::size_t i = 0; i < g.inputs.size(); ++i) {
                        cand = cand + in[i].scaled(g.constants[i]);
                    }
                    break;
            }
            cand = cand.exponents_reduced(facts);
            std::set<WireId> vars = cand.vars();
            if (vars.size() > 4 || cand.term_count() > 16) continue;
            polys.emplace(out, cand);
            grew = true;
            std::vector<WireId> vv(vars.begin(), vars.end());
            bool preserves = true;
            for (std::uint32_t bits = 0; bits < (1u << vv.size()) && preserves; ++bits) {
                std::map<WireId, FieldElement> vals;
                for (std::size_t i = 0; i < vv.size(); ++i) {
                    vals.emplace(vv[i], FieldElement((bits >> i) & 1, ctx.spec));
                }
                preserves = cand.eval(vals).value() <= 1;
            }
            if (preserves) facts.insert(out);
        }
    }
    return facts;
}

struct ArithCoeffs {
    FieldElement l, r, m, c;  // o = l*wl + r*wr + m*wl*wr + c
};

ArithCoeffs normalized(const GateInstance& g) {
    const auto& q = g.constants;
    FieldElement neg_inv_qo = -q[2].inv();
    return {q[0] * neg_inv_qo, q[1] * neg_inv_qo, q[3] * neg_inv_qo, q[4] * neg_inv_qo};
}

}  // namespace

PassResult boolean_reduce(const Circuit& c, const PassContext& ctx) {
    const FieldSpec spec = ctx.spec;
    std::vector<GateInstance> gates = c.gates_in_order();
    const std::set<WireId> defined = defined_set(gates);
    for (WireId w : ctx.assumed_bool) {
        if (defined.count(w)) {
            throw std::invalid_argument("assumed boolean fact on defined wire " +
                                        std::to_string(w));
        }
    }
    const std::set<WireId> facts = strong_facts(gates, ctx);
    const FieldElement one(1, spec), zero(0, spec), neg_one = -one;

    std::map<WireId, MultiPoly> poly;
    auto expansion = [&](WireId w) {
        auto it = poly.find(w);
        return it != poly.end() ? it->second : MultiPoly::var(w, spec);
    };

    std::size_t apps = 0;
    std::vector<GateInstance> out;
    for (const auto& g : gates) {
        switch (g.op) {
            case GateOp::Constant:
                poly.emplace(g.outputs[0], MultiPoly::constant(g.constants[0]));
                out.push_back(g);
                break;
            case GateOp::Arith: {
                const WireId o = g.outputs[0];
                ArithCoeffs a = normalized(g);
                MultiPoly L = expansion(g.inputs[0]);
                MultiPoly R = expansion(g.inputs[1]);
                MultiPoly cand = L.scaled(a.l) + R.scaled(a.r) + (L * R).scaled(a.m) +
                                 MultiPoly::constant(a.c);
                MultiPoly reduced = cand.exponents_reduced(facts);
                const bool expandable =
                    reduced.vars().size() <= 3 && reduced.term_count() <= 16;
                GateInstance ng = g;
                if (expandable) {
                    std::set<WireId> vars = reduced.vars();
                    if (vars.empty()) {
                        ng = GateInstance::constant(o, reduced.coeff({}));
                    } else if (vars.size() == 1) {
                        WireId x = *vars.begin();
                        bool fits = true;
                        for (const auto& [key, cf] : reduced.terms()) {
                            fits = fits && (key.empty() || key.at(x) <= 2);
                        }
                        if (fits) {
                            ng = GateInstance::arith(x, x, o, reduced.coeff({{x, 1}}), zero,
                                                     neg_one, reduced.coeff({{x, 2}}),
                                                     reduced.coeff({}));
                        }
                    } else if (vars.size() == 2) {
                        auto it = vars.begin();
                        WireId x = *it++, y = *it;
                        bool fits = true;
                        for (const auto& [key, cf] : reduced.terms()) {
                            for (const auto& [w, e] : key) fits = fits && e == 1;
                        }
                        if (fits) {
                            ng = GateInstance::arith(x, y, o, reduced.coeff({{x, 1}}),
                                                     reduced.coeff({{y, 1}}), neg_one,
                                                     reduced.coeff({{x, 1}, {y, 1}}),
                                                     reduced.coeff({}));
                        }
                    }
                    poly.insert_or_assign(o, reduced);
                }
                if (!same_gate(ng, g)) ++apps;
                out.push_back(ng);
                break;
            }
            case GateOp::BoolCheck:
                if (defined.count(g.inputs[0]) && facts.count(g.inputs[0])) {
                    ++apps;  // provable from the remaining constraints; drop
                } else {
                    out.push_back(g);
                }
                break;
            default:
                out.push_back(g);
                break;
        }
    }
    return {Circuit::from_gates(out), apps};
}

PassResult linear_inline(const Circuit& c, const PassContext& ctx) {
    std::vector<GateInstance> gates = c.gates_in_order();
    std::size_t apps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        // Single-variable linear producers: x1 = a*x0 + b.
        struct Lin {
            WireId src;
            FieldElement a, b;
        };
        std::map<WireId, Lin> lin;
        for (const auto& g : gates) {
            if (g.op != GateOp::Arith || !g.constants[3].is_zero()) continue;
            ArithCoeffs n = normalized(g);
            WireId l = g.inputs[0], r = g.inputs[1];
            if (l == r) {
                lin[g.outputs[0]] = {l, n.l + n.r, n.c};
            } else if (n.r.is_zero()) {
                lin[g.outputs[0]] = {l, n.l, n.c};
            } else if (n.l.is_zero()) {
                lin[g.outputs[0]] = {r, n.r, n.c};
            }
        }
        for (auto& g : gates) {
            if (g.op != GateOp::Arith) continue;
            WireId l = g.inputs[0], r = g.inputs[1];
            if (l == r) continue;
            auto& q = g.constants;
            auto it = lin.find(l);
            if (it != lin.end()) {
                const Lin& p = it->second;
                q = {q[0] * p.a, q[1] + q[3] * p.b, q[2], q[3] * p.a, q[0] * p.b + q[4]};
                g.inputs[0] = p.src;
                ++apps;
                changed = true;
                break;
            }
            it = lin.find(r);
            if (it != lin.end()) {
                const Lin& p = it->second;
                q = {q[0] + q[3] * p.b, q[1] * p.a, q[2], q[3] * p.a, q[1] * p.b + q[4]};
                g.inputs[1] = p.src;
                ++apps;
                changed = true;
                break;
            }
        }
    }
    return {Circuit::from_gates(gates), apps};
}

PassResult cse(const Circuit& c, const PassContext& ctx) {
    std::vector<GateInstance> gates = c.gates_in_order();
    const std::set<WireId> outputs(ctx.sig.outputs.begin(), ctx.sig.outputs.end());
    std::map<WireId, WireId> remap;
    auto rw = [&](WireId w) {
        auto it = remap.find(w);
        return it == remap.end() ? w : it->second;
    };
    std::vector<GateInstance> kept;
    std::size_t apps = 0;
    for (auto g : gates) {
        for (WireId& w : g.inputs) w = rw(w);
        std::vector<WireId> defined = g.defined_wires();
        bool pinned = false;
        for (WireId w : defined) pinned = pinned || outputs.count(w);
        const GateInstance* prior = nullptr;
        if (!defined.empty() && !pinned) {
            for (const auto& k : kept) {
                if (k.same_computation(g)) {
                    prior = &k;
                    break;
                }
            }
        }
        if (prior) {
            std::vector<WireId> target = prior->defined_wires();
            for (std::size_t i = 0; i < defined.size(); ++i) remap[defined[i]] = target[i];
            ++apps;
        } else {
            kept.push_back(std::move(g));
        }
    }
    return {Circuit::from_gates(kept), apps};
}

PassResult dedup_assertions(const Circuit& c, const PassContext& ctx) {
    std::vector<GateInstance> gates = c.gates_in_order();
    std::set<std::string> seen;
    std::vector<GateInstance> kept;
    std::size_t apps = 0;
    for (const auto& g : gates) {
        if (g.op == GateOp::BoolCheck || g.op == GateOp::Lookup) {
            std::string key = gate_op_name(g.op) + "|" + g.table;
            for (WireId w : g.inputs) key += "," + std::to_string(w);
            if (!seen.insert(key).second) {
                ++apps;
                continue;
            }
        }
        kept.push_back(g);
    }
    return {Circuit::from_gates(kept), apps};
}

namespace {

// Shared LinComb emitter: splits oversized sums into a tree, pads to the
// profile width. Returns the number of gates emitted.
std::size_t emit_lin_comb(std::vector<GateInstance>& body,
                          std::vector<std::pair<FieldElement, WireId>> terms, WireId out,
                          std::size_t lc_width, WireId& next, const FieldSpec& spec) {
    std::size_t emitted = 0;
    while (terms.size() > lc_width) {
        std::vector<WireId> wires;
        std::vector<FieldElement> coeffs;
        for (std::size_t i = 0; i < lc_width; ++i) {
            coeffs.push_back(terms[i].first);
            wires.push_back(terms[i].second);
        }
        WireId aux = next++;
        body.push_back(GateInstance::lin_comb(wires, aux, coeffs));
        ++emitted;
        std::vector<std::pair<FieldElement, WireId>> rest;
        rest.emplace_back(FieldElement(1, spec), aux);
        rest.insert(rest.end(), terms.begin() + lc_width, terms.end());
        terms = std::move(rest);
    }
    std::vector<WireId> wires;
    std::vector<FieldElement> coeffs;
    for (const auto& [q, w] : terms) {
        coeffs.push_back(q);
        wires.push_back(w);
    }
    while (wires.size() < lc_width) {
        coeffs.push_back(FieldElement(0, spec));
        wires.push_back(wires.front());
    }
    body.push_back(GateInstance::lin_comb(wires, out, coeffs));
    return emitted + 1;
}

}  // namespace

PassResult to_profile(const Circuit& c, const PassContext& ctx) {
    if (ctx.profile.kind == Profile::Kind::PlonkArith) return {c, 0};
    const FieldSpec spec = ctx.spec;
    const std::size_t lcw = ctx.profile.lc_width;
    const FieldElement one(1, spec), zero(0, spec);
    std::vector<GateInstance> gates = c.gates_in_order();
    std::size_t apps = 0;

    std::map<WireId, std::size_t> uses;
    for (const auto& g : gates) {
        for (WireId w : g.inputs) ++uses[w];
    }
    for (WireId w : ctx.sig.outputs) ++uses[w];
    const std::set<WireId> outputs(ctx.sig.outputs.begin(), ctx.sig.outputs.end());

    WireId next = c.wire_count();

    // Pooled constant-one wire. An existing Constant(1) is hoisted to the
    // front so lowered gates anywhere may reference it; otherwise one is
    // created on demand.
    std::optional<WireId> existing_one;
    for (const auto& g : gates) {
        if (g.op == GateOp::Constant && g.constants[0].is_one()) {
            existing_one = g.outputs[0];
            break;
        }
    }
    bool used_one = existing_one.has_value();
    WireId one_wire = existing_one.value_or(0);
    auto ensure_one = [&]() {
        if (!used_one) {
            one_wire = next++;
            used_one = true;
        }
        return one_wire;
    };

    // Phase 1: fully folded linear expansions. A producer is folded into
    // its consumer when it is linear, used exactly once, and not an output.
    struct Lin {
        std::map<WireId, FieldElement> terms;
        FieldElement cst;
    };
    std::map<WireId, Lin> lin;
    std::set<WireId> consumed;
    for (const auto& g : gates) {
        if (g.op != GateOp::Arith || !g.constants[3].is_zero()) continue;
        ArithCoeffs a = normalized(g);
        Lin e{{}, a.c};
        std::vector<std::pair<FieldElement, WireId>> raw;
        if (g.inputs[0] == g.inputs[1]) {
            raw.emplace_back(a.l + a.r, g.inputs[0]);
        } else {
            raw.emplace_back(a.l, g.inputs[0]);
            raw.emplace_back(a.r, g.inputs[1]);
        }
        for (const auto& [q, w] : raw) {
            if (q.is_zero()) continue;
            auto it = lin.find(w);
            if (it != lin.end() && uses[w] == 1 && !outputs.count(w)) {
                e.cst = e.cst + q * it->second.cst;
                for (const auto& [w2, q2] : it->second.terms) {
                    FieldElement merged = q * q2;
                    auto [slot, fresh_term] = e.terms.emplace(w2, merged);
                    if (!fresh_term) slot->second = slot->second + merged;
                }
                consumed.insert(w);
            } else {
                auto [slot, fresh_term] = e.terms.emplace(w, q);
                if (!fresh_term) slot->second = slot->second + q;
            }
        }
        for (auto it = e.terms.begin(); it != e.terms.end();) {
            it = it->second.is_zero() ? e.terms.erase(it) : std::next(it);
        }
        lin[g.outputs[0]] = std::move(e);
    }

    // Phase 2: emit.
    std::vector<GateInstance> body;
    for (const auto& g : gates) {
        if (existing_one && g.op == GateOp::Constant && g.outputs[0] == *existing_one) {
            continue;  // re-emitted at the front
        }
        switch (g.op) {
            case GateOp::Arith: {
                const WireId o = g.outputs[0];
                if (consumed.count(o)) {
                    ++apps;
                    continue;
                }
                ArithCoeffs a = normalized(g);
                WireId l = g.inputs[0], r = g.inputs[1];
                if (l == r) {
                    a.l = a.l + a.r;
                    a.r = zero;
                }
                if (!a.m.is_zero()) {
                    // o = m*l*r + (linear part)
                    std::vector<std::pair<FieldElement, WireId>> parts;
                    if (!a.l.is_zero()) parts.emplace_back(a.l, l);
                    if (!a.r.is_zero()) parts.emplace_back(a.r, r);
                    if (!a.c.is_zero()) parts.emplace_back(a.c, ensure_one());
                    if (parts.empty()) {
                        body.push_back(GateInstance::fma(l, r, l, o, a.m, zero));
                    } else if (parts.size() == 1) {
                        body.push_back(
                            GateInstance::fma(l, r, parts[0].second, o, a.m, parts[0].first));
                    } else {
                        WireId u;
                        if (parts.size() == 2) {
                            u = next++;
                            body.push_back(GateInstance::fma(parts[0].second, ensure_one(),
                                                             parts[1].second, u, parts[0].first,
                                                             parts[1].first));
                        } else {
                            WireId u1 = next++;
                            body.push_back(GateInstance::fma(parts[0].second, ensure_one(),
                                                             parts[1].second, u1, parts[0].first,
                                                             parts[1].first));
                            u = next++;
                            body.push_back(GateInstance::fma(parts[2].second, ensure_one(),
                                                             u1, u, parts[2].first, one));
                        }
                        body.push_back(GateInstance::fma(l, r, u, o, a.m, one));
                    }
                    ++apps;
                    break;
                }
                const Lin& e = lin.at(o);
                std::vector<std::pair<FieldElement, WireId>> terms;
                for (const auto& [w, q] : e.terms) terms.emplace_back(q, w);
                if (!e.cst.is_zero()) terms.emplace_back(e.cst, ensure_one());
                if (terms.empty()) {
                    body.push_back(GateInstance::constant(o, e.cst));
                } else if (terms.size() == 1) {
                    body.push_back(GateInstance::fma(terms[0].second, ensure_one(), terms[0].second,
                                                     o, terms[0].first, zero));
                } else if (terms.size() == 2) {
                    body.push_back(GateInstance::fma(terms[0].second, ensure_one(),
                                                     terms[1].second, o, terms[0].first,
                                                     terms[1].first));
                } else {
                    emit_lin_comb(body, terms, o, lcw, next, spec);
                }
                ++apps;
                break;
            }
            case GateOp::LinComb: {
                if (g.inputs.size() == lcw) {
                    body.push_back(g);
                    break;
                }
                std::vector<std::pair<FieldElement, WireId>> terms;
                for (std::size_t i = 0; i < g.inputs.size(); ++i) {
                    terms.emplace_back(g.constants[i], g.inputs[i]);
                }
                emit_lin_comb(body, terms, g.outputs[0], lcw, next, spec);
                ++apps;
                break;
            }
            default:
                body.push_back(g);
                break;
        }
    }
    if (used_one) {
        GateInstance front = GateInstance::constant(one_wire, one);
        body.insert(body.begin(), front);
    }
    return {Circuit::from_gates(body), apps};
}

PassResult dce(const Circuit& c, const PassContext& ctx) {
    std::vector<GateInstance> gates = c.gates_in_order();
    std::map<WireId, std::size_t> producer;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        for (WireId w : gates[i].defined_wires()) producer[w] = i;
    }
    std::vector<bool> live(gates.size(), false);
    std::vector<std::size_t> work;
    const std::set<WireId> outputs(ctx.sig.outputs.begin(), ctx.sig.outputs.end());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        bool root = gates[i].op == GateOp::BoolCheck || gates[i].op == GateOp::Lookup ||
                    gates[i].op == GateOp::Decompose;
        for (WireId w : gates[i].defined_wires()) root = root || outputs.count(w);
        if (root) {
            live[i] = true;
            work.push_back(i);
        }
    }
    while (!work.empty()) {
        std::size_t i = work.back();
        work.pop_back();
        for (WireId w : gates[i].inputs) {
            auto it = producer.find(w);
            if (it != producer.end() && !live[it->second]) {
                live[it->second] = true;
                work.push_back(it->second);
            }
        }
    }
    std::vector<GateInstance> kept;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (live[i]) kept.push_back(gates[i]);
    }
    return {Circuit::from_gates(kept), gates.size() - kept.size()};
}

PassResult mutant_drop_assertions(const Circuit& c, const PassContext&) {
    std::vector<GateInstance> kept;
    std::size_t apps = 0;
    for (const auto& g : c.gates_in_order()) {
        if (g.op == GateOp::BoolCheck) {
            ++apps;
        } else {
            kept.push_back(g);
        }
    }
    return {Circuit::from_gates(kept), apps};
}

std::vector<std::string> default_passes() {
    return {"boolean_reduce", "linear_inline", "cse", "dedup_assertions", "to_profile", "dce"};
}

PassResult run_pass(const std::string& name, const Circuit& c, const PassContext& ctx) {
    if (name == "boolean_reduce") return boolean_reduce(c, ctx);
    if (name == "linear_inline") return linear_inline(c, ctx);
    if (name == "cse") return cse(c, ctx);
    if (name == "dedup_assertions") return dedup_assertions(c, ctx);
    if (name == "to_profile") return to_profile(c, ctx);
    if (name == "dce") return dce(c, ctx);
    if (name == "mutant_drop_assertions") return mutant_drop_assertions(c, ctx);
    throw std::invalid_argument("unknown pass: " + name);
}

OptimizeResult optimize(const Circuit& c, const PassContext& ctx,
                        const std::vector<std::string>& passes, std::size_t max_iterations) {
    OptimizeResult out;
    out.circuit = c;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        std::size_t round_apps = 0;
        for (const auto& name : passes) {
            PassReport rep;
            rep.name = name;
            rep.before = out.circuit.stats();
            PassResult res = run_pass(name, out.circuit, ctx);
            rep.applications = res.applications;
            rep.after = res.circuit.stats();
            round_apps += res.applications;
            out.circuit = res.circuit;
            out.reports.push_back(std::move(rep));
        }
        if (round_apps == 0) break;
    }
    DisciplineReport audit = check_discipline(out.circuit, ctx);
    if (!audit.ok()) {
        std::string msg = "soundness discipline violated after optimization:";
        for (const auto& v : audit.violations) msg += " " + v + ";";
        throw std::logic_error(msg);
    }
    return out;
}

DisciplineReport check_discipline(const Circuit& c, const PassContext& ctx) {
    DisciplineReport rep;
    std::vector<GateInstance> gates = c.gates_in_order();
    std::set<WireId> looked;
    for (const auto& g : gates) {
        if (g.op == GateOp::Lookup) {
            for (WireId w : g.inputs) looked.insert(w);
        }
    }
    for (const auto& g : gates) {
        if (g.op != GateOp::Decompose) continue;
        for (WireId w : g.outputs) {
            if (!looked.count(w)) {
                rep.violations.push_back("decompose output wire " + std::to_string(w) +
                                         " has no range lookup");
            }
        }
    }
    const std::set<WireId> facts = strong_facts(gates, ctx, /*include_all_bool_checks=*/true);
    std::set<WireId> present;
    for (const auto& g : gates) {
        present.insert(g.inputs.begin(), g.inputs.end());
        present.insert(g.aux.begin(), g.aux.end());
        present.insert(g.outputs.begin(), g.outputs.end());
    }
    // A tagged wire the optimizer erased entirely carries no obligation.
    for (WireId w : ctx.bool_tagged) {
        if (!present.count(w)) continue;
        if (!facts.count(w)) {
            rep.violations.push_back("boolean-tagged wire " + std::to_string(w) +
                                     " has no boolean constraint");
        }
    }
    return rep;
}

CustomGate flatten(const Circuit& c, std::size_t max_degree, const FieldSpec& spec,
                   const std::optional<std::vector<WireId>>& declared_outputs) {
    if (max_degree < 2) throw std::invalid_argument("flatten: max_degree must be at least 2");
    std::vector<GateInstance> gates = c.gates_in_order();
    for (const auto& g : gates) {
        if (g.op == GateOp::Lookup) {
            throw std::invalid_argument("flatten: lookup gates cannot become identities");
        }
    }
    CircuitSignature sig = signature(c, declared_outputs);

    const FieldElement one(1, spec);
    std::vector<WireId> slots;
    std::set<WireId> retained;
    std::map<WireId, MultiPoly> poly;
    std::vector<MultiPoly> pending;  // each must evaluate to zero

    for (WireId w : sig.inputs) {
        slots.push_back(w);
        retained.insert(w);
        poly.emplace(w, MultiPoly::var(w, spec));
    }
    auto get = [&](WireId w) {
        auto it = poly.find(w);
        return it != poly.end() ? it->second : MultiPoly::var(w, spec);
    };
    auto retain = [&](WireId w) {
        if (retained.count(w)) return;
        retained.insert(w);
        slots.push_back(w);
        auto it = poly.find(w);
        MultiPoly v = MultiPoly::var(w, spec);
        if (it != poly.end() && !(it->second == v)) {
            pending.push_back(v - it->second);
        }
        poly.insert_or_assign(w, v);
    };
    // Re-evaluates `build` after retaining the highest-degree operand until
    // the result honors the bound.
    auto bounded = [&](const std::function<MultiPoly()>& build,
                       const std::vector<WireId>& operands) {
        MultiPoly e = build();
        while (e.degree() > max_degree) {
            WireId pick = 0;
            std::size_t best = 0;
            for (WireId w : operands) {
                std::size_t d = get(w).degree();
                if (!retained.count(w) && d > best) {
                    best = d;
                    pick = w;
                }
            }
            if (best == 0) throw std::logic_error("flatten: cannot honor the degree bound");
            retain(pick);
            e = build();
        }
        return e;
    };

    for (const auto& g : gates) {
        switch (g.op) {
            case GateOp::Constant:
                poly.insert_or_assign(g.outputs[0], MultiPoly::constant(g.constants[0]));
                break;
            case GateOp::Arith: {
                ArithCoeffs a = normalized(g);
                WireId l = g.inputs[0], r = g.inputs[1];
                MultiPoly e = bounded(
                    [&] {
                        MultiPoly L = get(l), R = get(r);
                        return L.scaled(a.l) + R.scaled(a.r) + (L * R).scaled(a.m) +
                               MultiPoly::constant(a.c);
                    },
                    {l, r});
                poly.insert_or_assign(g.outputs[0], e);
                break;
            }
            case GateOp::Fma: {
                WireId wa = g.inputs[0], wb = g.inputs[1], wc = g.inputs[2];
                MultiPoly e = bounded(
                    [&] {
                        return (get(wa) * get(wb)).scaled(g.constants[0]) +
                               get(wc).scaled(g.constants[1]);
                    },
                    {wa, wb, wc});
                poly.insert_or_assign(g.outputs[0], e);
                break;
            }
            case GateOp::LinComb: {
                MultiPoly e = bounded(
                    [&] {
                        MultiPoly acc(spec);
                        for (std::size_t i = 0; i < g.inputs.size(); ++i) {
                            acc = acc + get(g.inputs[i]).scaled(g.constants[i]);
                        }
                        return acc;
                    },
                    g.inputs);
                poly.insert_or_assign(g.outputs[0], e);
                break;
            }
            case GateOp::BoolCheck: {
                WireId i = g.inputs[0];
                MultiPoly e = bounded([&] { return get(i) * get(i) - get(i); }, {i});
                pending.push_back(e);
                break;
            }
            case GateOp::IsZero: {
                WireId i = g.inputs[0], r = g.aux[0], o = g.outputs[0];
                retain(r);
                retain(o);
                MultiPoly O = MultiPoly::var(o, spec), R = MultiPoly::var(r, spec);
                MultiPoly e = bounded(
                    [&] { return O + get(i) * R - MultiPoly::constant(one); }, {i});
                pending.push_back(e);
                pending.push_back(bounded([&] { return get(i) * O; }, {i}));
                pending.push_back(O * O - O);
                break;
            }
            case GateOp::Decompose: {
                MultiPoly acc(spec);
                FieldElement weight = one;
                FieldElement base(1ull << g.chunk_bits, spec);
                for (WireId n : g.outputs) {
                    retain(n);
                    acc = acc + MultiPoly::var(n, spec).scaled(weight);
                    weight = weight * base;
                }
                WireId x = g.inputs[0];
                MultiPoly e = bounded([&] { return acc - get(x); }, {x});
                pending.push_back(e);
                break;
            }
            case GateOp::Lookup:
                break;  // rejected above
        }
    }
    for (WireId o : sig.outputs) retain(o);

    std::map<WireId, std::size_t> slot_of;
    for (std::size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = i;

    CustomGate out;
    out.width = slots.size();
    out.witness_map = slots;
    for (const auto& p : pending) {
        Identity id;
        for (const auto& [key, coeff] : p.terms()) {
            Monomial m{coeff, {}, {}};
            for (const auto& [w, e] : key) {
                for (std::uint32_t k = 0; k < e; ++k) m.wire_slots.push_back(slot_of.at(w));
            }
            id.monomials.push_back(std::move(m));
        }
        out.max_degree = std::max(out.max_degree, identity_degree(id));
        out.identities.push_back(std::move(id));
    }
    return out;
}

}  // namespace plonkc
