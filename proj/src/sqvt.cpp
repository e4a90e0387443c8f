#include "negsimp/sqvt.hpp"

#include <algorithm>

namespace negsimp {

namespace {

bool has_param(const NormalType& t) {
    if (t.base == NormalType::Base::Param) return true;
    if (t.base == NormalType::Base::List) return t.elem && has_param(*t.elem);
    return false;
}

bool is_local_var(const Term& t, const std::map<VarId, NormalType>& locals) {
    return t.is_var() && locals.count(t.var) != 0;
}

bool term_has_local(const Term& t, const std::map<VarId, NormalType>& locals) {
    for (VarId v : vars(t))
        if (locals.count(v)) return true;
    return false;
}

}  // namespace

std::optional<SqvtResult> sqvt(Session& session, const ExistenceProperty& p, const Atom& g,
                               const std::map<VarId, NormalType>& locals, const TypeEnv& env) {
    auto& c = session.counters();
    ++c.sqvt_calls;
    c.last_call_slot_visits = 0;
    auto visit = [&c] {
        ++c.slot_visits;
        ++c.last_call_slot_visits;
    };

    if (p.kind != ExistenceProperty::Kind::Eu && p.kind != ExistenceProperty::Kind::Es) {
        ++c.sqvt_failures;
        return std::nullopt;
    }
    if (g.pred != p.pred || g.arity() != p.arity) {
        ++c.sqvt_failures;
        return std::nullopt;
    }

    TypeEnv all = env;
    for (const auto& [v, t] : locals) all.set(v, t);

    // Bind type parameters against the actual input argument types, then
    // work with the instantiated property throughout.
    std::map<std::string, NormalType> bindings;
    for (int pos = 1; pos <= p.arity; ++pos) {
        const auto& slot = p.slots[(size_t)(pos - 1)];
        if (!slot.input || !has_param(slot.in_ty)) continue;
        match_type(type_of_or_top(g.args[(size_t)(pos - 1)], all), slot.in_ty, bindings);
    }

    // Line (02): every input argument has the input parameter's type and
    // contains no local variable.
    for (int pos = 1; pos <= p.arity; ++pos) {
        const auto& slot = p.slots[(size_t)(pos - 1)];
        if (!slot.input) continue;
        visit();
        const Term& tu = g.args[(size_t)(pos - 1)];
        if (term_has_local(tu, locals) ||
            !subtype(type_of_or_top(tu, all), instantiate(slot.in_ty, bindings))) {
            ++c.sqvt_failures;
            return std::nullopt;
        }
    }

    // Instantiated output subtype vectors, one per index.
    std::map<int, TypeVector> theta;  // index -> position -> type
    for (int j : p.indices)
        for (int pos = 1; pos <= p.arity; ++pos) {
            const auto& slot = p.slots[(size_t)(pos - 1)];
            if (slot.input) continue;
            theta[j][pos] = instantiate(slot.out_tys.at(j), bindings);
        }

    // Line (05): relevant indices.
    std::vector<int> J;
    for (int j : p.indices) {
        bool relevant = true;
        for (int pos = 1; pos <= p.arity; ++pos) {
            const auto& slot = p.slots[(size_t)(pos - 1)];
            if (slot.input) continue;
            visit();
            if (is_empty(intersect(type_of_or_top(g.args[(size_t)(pos - 1)], all), theta[j][pos]))) {
                relevant = false;
                break;
            }
        }
        if (relevant) J.push_back(j);
    }

    // Lines (06)-(17): partition output arguments.
    SqvtResult res;
    res.J = J;
    res.copy_types = theta;
    res.g_prime = g;
    for (int pos = 1; pos <= p.arity; ++pos) {
        const auto& slot = p.slots[(size_t)(pos - 1)];
        if (slot.input) continue;
        visit();
        const Term tx = g.args[(size_t)(pos - 1)];
        bool keep = is_local_var(tx, locals);
        if (keep)
            for (const auto& [q, r] : res.r_bar)
                if (r == tx) {
                    keep = false;
                    break;
                }
        if (keep) {
            NormalType ty = type_of_or_top(tx, all);
            for (int j : J)
                if (!subtype(theta[j][pos], ty)) {
                    keep = false;
                    break;
                }
        }
        if (keep) {
            res.r_bar.emplace(pos, tx);
        } else {
            res.s_tilde.emplace(pos, tx);
            for (VarId v : vars(tx))
                if (locals.count(v) && std::find(res.w_bar.begin(), res.w_bar.end(), v) == res.w_bar.end()) {
                    bool in_r = false;
                    for (const auto& [q, r] : res.r_bar)
                        if (r.is_var() && r.var == v) in_r = true;
                    if (!in_r) res.w_bar.push_back(v);
                }
            VarId z = session.fresh("Z");
            res.new_var_types.emplace(z, NormalType::top());
            res.z_bar.emplace(pos, Term::mkvar(z));
            res.g_prime.args[(size_t)(pos - 1)] = Term::mkvar(z);
        }
    }

    // Line (18).
    for (const auto& [pos, t] : res.r_bar) res.xbar.emplace(pos, t);
    for (const auto& [pos, t] : res.z_bar) res.xbar.emplace(pos, t);

    // Line (19): one typed fresh copy of xbar per relevant index.
    for (int j : J) {
        ArgVector copy;
        for (const auto& [pos, t] : res.xbar) {
            visit();
            VarId cv = session.fresh(session.name_of(t.var) + std::to_string(j));
            res.new_var_types.emplace(cv, theta[j][pos]);
            copy.emplace(pos, Term::mkvar(cv));
        }
        res.x_copies.push_back(std::move(copy));
    }

    // Theorem postulates (b)-(e), validated on every successful call.
    bool ok = true;
    for (const auto& [pos, tx] : res.s_tilde) {  // (b) maximality
        if (!is_local_var(tx, locals)) continue;
        bool dup = false;
        for (const auto& [q, r] : res.r_bar)
            if (q != pos && r == tx) dup = true;
        if (dup) continue;
        bool narrow = true;
        NormalType ty = type_of_or_top(tx, all);
        for (int j : J)
            if (!subtype(theta[j][pos], ty)) narrow = false;
        if (narrow) ok = false;
    }
    {  // (c) G' = G[s_tilde/z_bar]
        Atom expect = g;
        for (const auto& [pos, z] : res.z_bar) expect.args[(size_t)(pos - 1)] = z;
        if (!(expect == res.g_prime)) ok = false;
    }
    for (int pos = 1; pos <= p.arity; ++pos) {  // (d)
        const auto& slot = p.slots[(size_t)(pos - 1)];
        bool have = res.xbar.count(pos) != 0;
        if (slot.input == have) ok = false;
        if (have && !(res.xbar.at(pos) == res.g_prime.args[(size_t)(pos - 1)])) ok = false;
    }
    if (res.x_copies.size() != J.size()) ok = false;
    for (size_t i = 0; i < res.x_copies.size() && ok; ++i) {  // (e)
        const ArgVector& copy = res.x_copies[i];
        if (copy.size() != res.xbar.size()) ok = false;
        std::set<VarId> seen;
        for (const auto& [pos, t] : copy) {
            if (!t.is_var() || !seen.insert(t.var).second || !res.xbar.count(pos)) ok = false;
            if (ok && !equiv(res.new_var_types.at(t.var), theta[J[i]][pos])) ok = false;
        }
    }
    if (!ok) ++c.theorem_violations;

    return res;
}

}  // namespace negsimp
