#include "negsimp/alpha.hpp"

#include <functional>

namespace negsimp {

namespace {

using TyLookup = std::function<NormalType(VarId)>;

struct Bijection {
    std::map<VarId, VarId> fwd, bwd;
};

NormalType env_ty(const TypeEnv& env, const std::map<VarId, NormalType>* extra, VarId v) {
    if (extra) {
        auto it = extra->find(v);
        if (it != extra->end()) return it->second;
    }
    return env.has(v) ? env.type_of_var(v) : NormalType::top();
}

bool match_var(VarId v1, VarId v2, const NormalType& t1, const NormalType& t2, Bijection& bj) {
    auto f = bj.fwd.find(v1);
    auto b = bj.bwd.find(v2);
    if (f != bj.fwd.end() || b != bj.bwd.end())
        return f != bj.fwd.end() && b != bj.bwd.end() && f->second == v2 && b->second == v1;
    if (!equiv(t1, t2)) return false;
    bj.fwd.emplace(v1, v2);
    bj.bwd.emplace(v2, v1);
    return true;
}

bool match_term(const Term& a, const Term& b, const TyLookup& la, const TyLookup& lb, Bijection& bj) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Term::Kind::Var: return match_var(a.var, b.var, la(a.var), lb(b.var), bj);
        case Term::Kind::Num: return a.num_int == b.num_int && a.num == b.num;
        case Term::Kind::Compound: {
            if (a.functor != b.functor || a.args.size() != b.args.size()) return false;
            for (size_t i = 0; i < a.args.size(); ++i)
                if (!match_term(a.args[i], b.args[i], la, lb, bj)) return false;
            return true;
        }
    }
    return false;
}

bool match_atom(const Atom& a, const Atom& b, const TyLookup& la, const TyLookup& lb, Bijection& bj) {
    if (a.pred != b.pred || a.eq_functor != b.eq_functor || a.args.size() != b.args.size())
        return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!match_term(a.args[i], b.args[i], la, lb, bj)) return false;
    return true;
}

// Multiset matching of atoms with backtracking.
bool match_atom_set(const std::vector<const Atom*>& as, const std::vector<const Atom*>& bs,
                    size_t i, std::vector<bool>& used, const TyLookup& la, const TyLookup& lb,
                    Bijection& bj) {
    if (i == as.size()) return true;
    for (size_t j = 0; j < bs.size(); ++j) {
        if (used[j]) continue;
        Bijection save = bj;
        used[j] = true;
        if (match_atom(*as[i], *bs[j], la, lb, bj) &&
            match_atom_set(as, bs, i + 1, used, la, lb, bj))
            return true;
        used[j] = false;
        bj = save;
    }
    return false;
}

bool match_neg(const NegGoal& a, const NegGoal& b, const TypeEnv& ea, const TypeEnv& eb,
               Bijection& bj) {
    if (a.atoms.size() != b.atoms.size() || a.locals.size() != b.locals.size()) return false;
    TyLookup la = [&](VarId v) { return env_ty(ea, &a.locals, v); };
    TyLookup lb = [&](VarId v) { return env_ty(eb, &b.locals, v); };
    std::vector<const Atom*> as, bs;
    for (const auto& [id, at] : a.atoms) as.push_back(&at);
    for (const auto& [id, at] : b.atoms) bs.push_back(&at);
    std::vector<bool> used(bs.size(), false);
    if (!match_atom_set(as, bs, 0, used, la, lb, bj)) return false;
    // bound variables already mapped must land on bound variables of
    // equivalent type; unused ones only need matching type multisets
    std::vector<NormalType> ua, ub;
    for (const auto& [v, t] : a.locals) {
        auto it = bj.fwd.find(v);
        if (it == bj.fwd.end()) {
            ua.push_back(t);
            continue;
        }
        auto jt = b.locals.find(it->second);
        if (jt == b.locals.end() || !equiv(t, jt->second)) return false;
    }
    for (const auto& [v, t] : b.locals)
        if (!bj.bwd.count(v)) ub.push_back(t);
    if (ua.size() != ub.size()) return false;
    std::vector<bool> taken(ub.size(), false);
    for (const auto& t : ua) {
        bool found = false;
        for (size_t j = 0; j < ub.size() && !found; ++j)
            if (!taken[j] && equiv(t, ub[j])) {
                taken[j] = true;
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

bool match_negeq(const NegEqLit& a, const NegEqLit& b, const TypeEnv& ea, const TypeEnv& eb,
                 Bijection& bj) {
    if (a.a.size() != b.a.size() || a.bound.size() != b.bound.size()) return false;
    std::map<VarId, NormalType> ba, bb;
    for (const auto& [v, t] : a.bound) ba.emplace(v, t);
    for (const auto& [v, t] : b.bound) bb.emplace(v, t);
    TyLookup la = [&](VarId v) { return env_ty(ea, &ba, v); };
    TyLookup lb = [&](VarId v) { return env_ty(eb, &bb, v); };
    for (size_t i = 0; i < a.a.size(); ++i) {
        if (!match_term(a.a[i], b.a[i], la, lb, bj)) return false;
        if (!match_term(a.b[i], b.b[i], la, lb, bj)) return false;
    }
    for (const auto& [v, t] : a.bound) {
        auto it = bj.fwd.find(v);
        if (it != bj.fwd.end() && !bb.count(it->second)) return false;
    }
    return true;
}

bool match_literal(const Literal& a, const Literal& b, const TypeEnv& ea, const TypeEnv& eb,
                   Bijection& bj) {
    if (a.kind != b.kind) return false;
    TyLookup la = [&](VarId v) { return env_ty(ea, nullptr, v); };
    TyLookup lb = [&](VarId v) { return env_ty(eb, nullptr, v); };
    switch (a.kind) {
        case Literal::Kind::Atom: return match_atom(a.atom, b.atom, la, lb, bj);
        case Literal::Kind::Neg: return match_neg(a.neg, b.neg, ea, eb, bj);
        case Literal::Kind::NegEq: return match_negeq(a.neg_eq, b.neg_eq, ea, eb, bj);
        case Literal::Kind::False: return true;
    }
    return false;
}

bool match_formula(const GoalFormula& a, const GoalFormula& b, size_t i, std::vector<bool>& used,
                   Bijection& bj) {
    if (i == a.lits.size()) return true;
    for (size_t j = 0; j < b.lits.size(); ++j) {
        if (used[j]) continue;
        Bijection save = bj;
        used[j] = true;
        if (match_literal(a.lits[i], b.lits[j], a.env, b.env, bj) &&
            match_formula(a, b, i + 1, used, bj))
            return true;
        used[j] = false;
        bj = save;
    }
    return false;
}

}  // namespace

bool alpha_equal(const GoalFormula& a, const GoalFormula& b) {
    if (a.lits.size() != b.lits.size()) return false;
    Bijection bj;
    std::vector<bool> used(b.lits.size(), false);
    return match_formula(a, b, 0, used, bj);
}

bool alpha_equal_frontier(const Frontier& a, const Frontier& b) {
    if (a.forms.size() != b.forms.size()) return false;
    std::vector<bool> used(b.forms.size(), false);
    for (const auto& f : a.forms) {
        bool found = false;
        for (size_t j = 0; j < b.forms.size() && !found; ++j)
            if (!used[j] && alpha_equal(f, b.forms[j])) {
                used[j] = true;
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace negsimp
