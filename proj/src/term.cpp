#include "negsimp/term.hpp"

namespace negsimp {

Term Term::int_const(long long v) {
    Term t;
    t.kind = Kind::Num;
    t.num_int = true;
    t.num = (double)v;
    return t;
}

Term Term::real_const(double v) {
    Term t;
    t.kind = Kind::Num;
    t.num_int = false;
    t.num = v;
    return t;
}

Term Term::compound(std::string f, std::vector<Term> args) {
    Term t;
    t.kind = Kind::Compound;
    t.functor = std::move(f);
    t.args = std::move(args);
    return t;
}

Term Term::nil() {
    return compound("[]", {});
}

Term Term::cons(Term head, Term tail) {
    return compound(".", {std::move(head), std::move(tail)});
}

bool Term::operator==(const Term& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Var: return var == o.var;
        case Kind::Num: return num_int == o.num_int && num == o.num;
        case Kind::Compound: return functor == o.functor && args == o.args;
    }
    return false;
}

ArgVector project(const ArgVector& v, const std::set<int>& positions) {
    ArgVector out;
    for (int p : positions) {
        auto it = v.find(p);
        if (it == v.end()) throw GoalError("projection position outside vector domain");
        out.emplace(p, it->second);
    }
    return out;
}

ArgVector juxtapose(const ArgVector& a, const ArgVector& b) {
    ArgVector out = a;
    for (const auto& [p, t] : b) {
        if (!out.emplace(p, t).second) throw GoalError("juxtaposition of vectors with overlapping domains");
    }
    return out;
}

bool all_diff(const ArgVector& v) {
    for (auto i = v.begin(); i != v.end(); ++i) {
        auto j = i;
        for (++j; j != v.end(); ++j)
            if (i->second == j->second) return false;
    }
    return true;
}

Term apply(const Substitution& s, const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: {
            auto it = s.find(t.var);
            return it == s.end() ? t : it->second;
        }
        case Term::Kind::Num: return t;
        case Term::Kind::Compound: {
            Term out = t;
            for (auto& a : out.args) a = negsimp::apply(s, a);
            return out;
        }
    }
    return t;
}

Atom apply(const Substitution& s, const Atom& a) {
    Atom out = a;
    for (auto& t : out.args) t = negsimp::apply(s, t);
    return out;
}

ArgVector apply(const Substitution& s, const ArgVector& v) {
    ArgVector out;
    for (const auto& [p, t] : v) out.emplace(p, negsimp::apply(s, t));
    return out;
}

void collect_vars(const Term& t, std::set<VarId>& out) {
    if (t.kind == Term::Kind::Var) {
        out.insert(t.var);
    } else if (t.kind == Term::Kind::Compound) {
        for (const auto& a : t.args) collect_vars(a, out);
    }
}

std::set<VarId> vars(const Term& t) {
    std::set<VarId> out;
    collect_vars(t, out);
    return out;
}

std::set<VarId> vars(const Atom& a) {
    std::set<VarId> out;
    for (const auto& t : a.args) collect_vars(t, out);
    return out;
}

std::set<VarId> vars(const ArgVector& v) {
    std::set<VarId> out;
    for (const auto& [p, t] : v) collect_vars(t, out);
    return out;
}

std::set<VarId> vars(const std::vector<Atom>& conj) {
    std::set<VarId> out;
    for (const auto& a : conj)
        for (const auto& t : a.args) collect_vars(t, out);
    return out;
}

const NormalType& TypeEnv::type_of_var(VarId v) const {
    auto it = ty.find(v);
    if (it == ty.end()) throw GoalError("variable has no type attribute");
    return it->second;
}

bool is_list_term(const Term& t) {
    if (t.kind != Term::Kind::Compound) return false;
    return t.functor == "[]" || (t.functor == "." && t.args.size() == 2);
}

static NormalType type_of_impl(const Term& t, const TypeEnv& env, bool lenient) {
    switch (t.kind) {
        case Term::Kind::Var: return env.type_of_var(t.var);
        case Term::Kind::Num:
            if (t.num_int) return NormalType::int_range((long long)t.num, (long long)t.num);
            return NormalType::real_range(Bound::closed(t.num), Bound::closed(t.num));
        case Term::Kind::Compound: {
            if (t.functor == "[]" && t.args.empty()) return NormalType::list(NormalType::bot());
            if (t.functor == "." && t.args.size() == 2) {
                NormalType head = type_of_impl(t.args[0], env, lenient);
                NormalType tail = type_of_impl(t.args[1], env, lenient);
                NormalType tail_elem =
                    tail.base == NormalType::Base::List ? *tail.elem : NormalType::top();
                return NormalType::list(type_join(head, tail_elem));
            }
            if (lenient) return NormalType::top();
            throw GoalError("term with functor " + t.functor + " is untypeable");
        }
    }
    return NormalType::top();
}

NormalType type_of(const Term& t, const TypeEnv& env) {
    return type_of_impl(t, env, false);
}

NormalType type_of_or_top(const Term& t, const TypeEnv& env) {
    return type_of_impl(t, env, true);
}

VarId Session::fresh(const std::string& base) {
    std::string name = base;
    if (by_name_.count(name)) {
        int& n = suffix_[base];
        do {
            ++n;
            name = base + "_" + std::to_string(n);
        } while (by_name_.count(name));
    }
    VarId id = (VarId)names_.size();
    names_.push_back(name);
    by_name_.emplace(name, id);
    return id;
}

VarId Session::intern(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    VarId id = (VarId)names_.size();
    names_.push_back(name);
    by_name_.emplace(name, id);
    return id;
}

const std::string& Session::name_of(VarId v) const {
    return names_.at((size_t)v);
}

}  // namespace negsimp
