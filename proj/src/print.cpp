#include "negsimp/print.hpp"

#include <sstream>

#include "json.hpp"

namespace negsimp {

namespace {

NormalType lookup_ty(VarId v, const TypeEnv& env, const std::map<VarId, NormalType>* extra) {
    if (extra) {
        auto it = extra->find(v);
        if (it != extra->end()) return it->second;
    }
    return env.has(v) ? env.type_of_var(v) : NormalType::top();
}

std::string num_str(const Term& t) {
    std::ostringstream os;
    if (t.num_int) {
        os << (long long)t.num;
    } else {
        os << t.num;
        if (os.str().find('.') == std::string::npos && os.str().find('e') == std::string::npos)
            os << ".0";
    }
    return os.str();
}

bool is_proper_list(const Term& t) {
    const Term* p = &t;
    while (p->kind == Term::Kind::Compound && p->functor == "." && p->args.size() == 2)
        p = &p->args[1];
    return p->kind == Term::Kind::Compound && p->functor == "[]" && p->args.empty();
}

}  // namespace

std::string term_str(const Term& t, const Session& s, const TypeEnv& env,
                     const std::map<VarId, NormalType>* extra) {
    switch (t.kind) {
        case Term::Kind::Var: {
            NormalType ty = lookup_ty(t.var, env, extra);
            if (ty.base == NormalType::Base::Top) return s.name_of(t.var);
            return s.name_of(t.var) + ":" + to_string(ty);
        }
        case Term::Kind::Num: return num_str(t);
        case Term::Kind::Compound: {
            if (is_proper_list(t)) {
                std::string out = "[";
                const Term* p = &t;
                bool first = true;
                while (p->functor == ".") {
                    if (!first) out += ",";
                    out += term_str(p->args[0], s, env, extra);
                    first = false;
                    p = &p->args[1];
                }
                return out + "]";
            }
            if (t.args.empty()) return t.functor;
            std::string out = t.functor + "(";
            for (size_t i = 0; i < t.args.size(); ++i) {
                if (i) out += ",";
                out += term_str(t.args[i], s, env, extra);
            }
            return out + ")";
        }
    }
    return "?";
}

std::string atom_str(const Atom& a, const Session& s, const TypeEnv& env,
                     const std::map<VarId, NormalType>* extra) {
    if (!a.eq_functor.empty()) {
        Term rhs = Term::compound(a.eq_functor, {a.args.begin() + 1, a.args.end()});
        return term_str(a.args[0], s, env, extra) + " = " + term_str(rhs, s, env, extra);
    }
    if (a.args.empty()) return a.pred;
    std::string out = a.pred + "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ",";
        out += term_str(a.args[i], s, env, extra);
    }
    return out + ")";
}

std::string literal_str(const Literal& l, const Session& s, const TypeEnv& env) {
    switch (l.kind) {
        case Literal::Kind::Atom: return atom_str(l.atom, s, env);
        case Literal::Kind::Neg: {
            std::string conj;
            bool first = true;
            for (const auto& [id, a] : l.neg.atoms) {
                if (!first) conj += ",";
                conj += atom_str(a, s, env, &l.neg.locals);
                first = false;
            }
            if (l.neg.atoms.size() > 1) conj = "(" + conj + ")";
            if (l.neg.atoms.empty()) conj = "true";
            std::string locals;
            first = true;
            for (const auto& [v, t] : l.neg.locals) {
                if (!first) locals += ",";
                locals += term_str(Term::mkvar(v), s, env, &l.neg.locals);
                first = false;
            }
            return "neg(" + conj + ",[" + locals + "])";
        }
        case Literal::Kind::NegEq: {
            std::map<VarId, NormalType> bty;
            for (const auto& [v, t] : l.neg_eq.bound) bty.emplace(v, t);
            auto side = [&](const std::vector<Term>& ts) {
                std::string out;
                for (size_t i = 0; i < ts.size(); ++i) {
                    if (i) out += ",";
                    out += term_str(ts[i], s, env, &bty);
                }
                return ts.size() == 1 ? out : "(" + out + ")";
            };
            std::string bound;
            for (size_t i = 0; i < l.neg_eq.bound.size(); ++i) {
                if (i) bound += ",";
                bound += term_str(Term::mkvar(l.neg_eq.bound[i].first), s, env, &bty);
            }
            return "neg_eq(" + side(l.neg_eq.a) + ", " + side(l.neg_eq.b) + ", [" + bound + "])";
        }
        case Literal::Kind::False: return "false";
    }
    return "?";
}

std::string formula_str(const GoalFormula& f, const Session& s) {
    if (f.lits.empty()) return "true";
    std::string out;
    for (size_t i = 0; i < f.lits.size(); ++i) {
        if (i) out += ", ";
        out += literal_str(f.lits[i], s, f.env);
    }
    return out;
}

std::string frontier_text(const Frontier& fr, const Session& s) {
    std::string out;
    for (const auto& f : fr.forms) out += formula_str(f, s) + ";\n\n";
    out += "no (more) solution.\n";
    if (!fr.complete) out += "(step limit reached; frontier incomplete)\n";
    return out;
}

std::string frontier_json(const Frontier& fr, const Session& s) {
    nlohmann::json root;
    root["complete"] = fr.complete;
    root["steps"] = fr.steps;
    root["frontier"] = nlohmann::json::array();
    for (const auto& f : fr.forms) {
        nlohmann::json rec;
        rec["literals"] = nlohmann::json::array();
        for (const auto& l : f.lits) {
            nlohmann::json lit;
            switch (l.kind) {
                case Literal::Kind::Atom:
                    lit["kind"] = "atom";
                    lit["text"] = literal_str(l, s, f.env);
                    break;
                case Literal::Kind::Neg:
                    lit["kind"] = "neg";
                    lit["text"] = literal_str(l, s, f.env);
                    break;
                case Literal::Kind::NegEq:
                    lit["kind"] = "neg_eq";
                    lit["text"] = literal_str(l, s, f.env);
                    break;
                case Literal::Kind::False:
                    lit["kind"] = "false";
                    lit["text"] = "false";
                    break;
            }
            rec["literals"].push_back(lit);
        }
        nlohmann::json types = nlohmann::json::object();
        for (VarId v : global_vars(f))
            types[s.name_of(v)] = to_string(f.env.has(v) ? f.env.type_of_var(v) : NormalType::top());
        rec["types"] = types;
        root["frontier"].push_back(rec);
    }
    return root.dump(2);
}

}  // namespace negsimp
