#include "negsimp/engine.hpp"

#include <algorithm>

namespace negsimp {

Literal Literal::mk_atom(Atom a) {
    Literal l;
    l.kind = Kind::Atom;
    l.atom = std::move(a);
    return l;
}

Literal Literal::mk_neg(NegGoal g) {
    Literal l;
    l.kind = Kind::Neg;
    l.neg = std::move(g);
    return l;
}

Literal Literal::mk_neg_eq(NegEqLit e) {
    Literal l;
    l.kind = Kind::NegEq;
    l.neg_eq = std::move(e);
    return l;
}

Literal Literal::mk_false() {
    Literal l;
    l.kind = Kind::False;
    return l;
}

NegGoal init_neg(const std::vector<Atom>& conj, const std::map<VarId, NormalType>& locals) {
    NegGoal g;
    g.locals = locals;
    int id = 0;
    for (const auto& a : conj) {
        g.atoms.emplace(id, a);
        g.checklist.push_back(id);
        ++id;
    }
    return g;
}

bool digraph_link(const NegGoal& g, int id, const std::set<VarId>& vs) {
    auto it = g.atoms.find(id);
    if (it == g.atoms.end()) throw EngineError("unknown digraph node");
    for (VarId v : vars(it->second))
        if (vs.count(v) && g.locals.count(v)) return true;
    return false;
}

void digraph_delete(NegGoal& g, const std::set<int>& atom_ids, const std::set<VarId>& vs) {
    for (int id : atom_ids)
        if (!g.atoms.erase(id)) throw EngineError("unknown digraph node");
    for (VarId v : vs) g.locals.erase(v);
    g.checklist.erase(std::remove_if(g.checklist.begin(), g.checklist.end(),
                                     [&](int id) { return atom_ids.count(id) != 0; }),
                      g.checklist.end());
}

namespace {

NormalType ty_of(const TypeEnv& env, VarId v) {
    return env.has(v) ? env.type_of_var(v) : NormalType::top();
}

bool is_ground(const Term& t) {
    if (t.is_var()) return false;
    for (const auto& a : t.args)
        if (!is_ground(a)) return false;
    return true;
}

std::optional<NormalType> term_type(const Term& t, const TypeEnv& env,
                                    const std::set<VarId>* bound,
                                    const std::vector<std::pair<VarId, NormalType>>& bound_ty) {
    if (t.is_var()) {
        if (bound && bound->count(t.var)) {
            for (const auto& [v, ty] : bound_ty)
                if (v == t.var) return ty;
        }
        return ty_of(env, t.var);
    }
    if (t.kind == Term::Kind::Num) {
        if (t.num_int) return NormalType::int_range((long long)t.num, (long long)t.num);
        return NormalType::real_range(Bound::closed(t.num), Bound::closed(t.num));
    }
    return std::nullopt;
}

void apply_in_place(const Substitution& s, Literal& l) {
    switch (l.kind) {
        case Literal::Kind::Atom: l.atom = negsimp::apply(s, l.atom); break;
        case Literal::Kind::Neg:
            for (auto& [id, a] : l.neg.atoms) a = negsimp::apply(s, a);
            break;
        case Literal::Kind::NegEq:
            for (auto& t : l.neg_eq.a) t = negsimp::apply(s, t);
            for (auto& t : l.neg_eq.b) t = negsimp::apply(s, t);
            break;
        case Literal::Kind::False: break;
    }
}

void compose(Substitution& s, VarId v, const Term& t) {
    Substitution one{{v, t}};
    for (auto& [w, u] : s) u = negsimp::apply(one, u);
    s[v] = t;
}

// Solves the positive equation conjuncts of a freshly assembled child:
// var = var unifies and restricts to the type intersection, ground = var
// restricts the variable's type, compound = var becomes a flat equation
// atom. Returns false when the child is unsatisfiable.
bool solve_positives(GoalFormula& f, const std::vector<std::pair<Term, Term>>& eqs) {
    Substitution sub;
    std::vector<Literal> extra;
    for (const auto& [l0, r0] : eqs) {
        Term l = negsimp::apply(sub, l0), r = negsimp::apply(sub, r0);
        if (l == r) continue;
        if (l.is_var() && r.is_var()) {
            NormalType t = intersect(ty_of(f.env, l.var), ty_of(f.env, r.var));
            if (is_empty(t)) return false;
            compose(sub, l.var, r);
            f.env.set(r.var, t);
        } else if (l.kind == Term::Kind::Num && r.is_var()) {
            NormalType t = intersect(*term_type(l, f.env, nullptr, {}), ty_of(f.env, r.var));
            if (is_empty(t)) return false;
            f.env.set(r.var, t);
        } else if (r.is_var()) {
            // flat equation  r = functor(l args)
            Atom eq;
            eq.pred = "=";
            eq.eq_functor = l.functor;
            eq.args.push_back(r);
            for (const auto& a : l.args) eq.args.push_back(a);
            extra.push_back(Literal::mk_atom(eq));
        } else {
            return false;  // distinct ground terms
        }
    }
    for (auto& lit : f.lits) apply_in_place(sub, lit);
    for (auto& lit : extra) apply_in_place(sub, lit);
    f.lits.insert(f.lits.end(), extra.begin(), extra.end());
    return true;
}

// Simplifies every residual disequality of the child: vacuously true
// ones vanish, single-variable ones fold into a type restriction when
// the difference is expressible, the rest stay as neg_eq literals.
// Returns false when the child is unsatisfiable.
bool simplify_negeqs(GoalFormula& f) {
    std::vector<Literal> out;
    for (auto& lit : f.lits) {
        if (lit.kind != Literal::Kind::NegEq) {
            out.push_back(std::move(lit));
            continue;
        }
        NegEqLit& ne = lit.neg_eq;
        std::set<VarId> bound;
        for (const auto& [v, t] : ne.bound) bound.insert(v);

        bool lit_true = false;
        std::vector<size_t> kept;
        for (size_t i = 0; i < ne.a.size(); ++i) {
            const Term &a = ne.a[i], &b = ne.b[i];
            if (a == b) continue;  // trivially satisfied equation
            auto ta = term_type(a, f.env, &bound, ne.bound);
            auto tb = term_type(b, f.env, &bound, ne.bound);
            if (ta && tb && is_empty(intersect(*ta, *tb))) {
                lit_true = true;  // equation unsatisfiable, negation holds
                break;
            }
            if (is_ground(a) && is_ground(b)) {
                lit_true = true;  // distinct ground terms
                break;
            }
            kept.push_back(i);
        }
        if (lit_true) continue;
        if (kept.empty()) return false;  // not(true)

        if (kept.size() == 1) {
            const Term &a = ne.a[kept[0]], &b = ne.b[kept[0]];
            bool a_bound = a.is_var() && bound.count(a.var);
            bool b_bound = b.is_var() && bound.count(b.var);
            if (a_bound && b_bound) return false;  // witness a = b exists
            if ((a_bound && !b.is_var() && b.kind == Term::Kind::Num) ||
                (b_bound && !a.is_var() && a.kind == Term::Kind::Num))
                return false;  // ground witness in the bound type
            if (a.is_var() && b.is_var() && (a_bound || b_bound)) {
                const Term& bv = a_bound ? a : b;
                const Term& gv = a_bound ? b : a;
                NormalType t = *term_type(bv, f.env, &bound, ne.bound);
                NormalType s = ty_of(f.env, gv.var);
                if (auto d = difference(s, t)) {
                    if (is_empty(*d)) return false;
                    f.env.set(gv.var, *d);
                    continue;
                }
            } else if (a.is_var() != b.is_var()) {
                const Term& v = a.is_var() ? a : b;
                const Term& c = a.is_var() ? b : a;
                if (!v.is_var() || bound.count(v.var)) {
                } else if (c.kind == Term::Kind::Num) {
                    NormalType s = ty_of(f.env, v.var);
                    if (auto d = difference(s, *term_type(c, f.env, nullptr, {}))) {
                        if (is_empty(*d)) return false;
                        f.env.set(v.var, *d);
                        continue;
                    }
                }
            }
        }

        // residualize the kept pairs
        NegEqLit res;
        std::set<VarId> used;
        std::vector<Term> ra, rb;
        for (size_t i : kept) {
            ra.push_back(ne.a[i]);
            rb.push_back(ne.b[i]);
            for (VarId v : vars(ne.a[i])) used.insert(v);
            for (VarId v : vars(ne.b[i])) used.insert(v);
        }
        res.a = std::move(ra);
        res.b = std::move(rb);
        for (const auto& [v, t] : ne.bound)
            if (used.count(v)) res.bound.emplace_back(v, t);
        out.push_back(Literal::mk_neg_eq(std::move(res)));
    }
    f.lits = std::move(out);
    return true;
}

}  // namespace

std::set<VarId> global_vars(const GoalFormula& f) {
    std::set<VarId> out;
    for (const auto& lit : f.lits) {
        switch (lit.kind) {
            case Literal::Kind::Atom:
                for (VarId v : vars(lit.atom)) out.insert(v);
                break;
            case Literal::Kind::Neg:
                for (const auto& [id, a] : lit.neg.atoms)
                    for (VarId v : vars(a))
                        if (!lit.neg.locals.count(v)) out.insert(v);
                break;
            case Literal::Kind::NegEq: {
                std::set<VarId> bound;
                for (const auto& [v, t] : lit.neg_eq.bound) bound.insert(v);
                for (const auto& t : lit.neg_eq.a)
                    for (VarId v : vars(t))
                        if (!bound.count(v)) out.insert(v);
                for (const auto& t : lit.neg_eq.b)
                    for (VarId v : vars(t))
                        if (!bound.count(v)) out.insert(v);
                break;
            }
            case Literal::Kind::False: break;
        }
    }
    return out;
}

Engine::Engine(Session& session, const PropertyStore& store, EngineOptions opt)
    : session_(session), store_(store), opt_(opt) {}

bool Engine::try_et(const GoalFormula& ctx, const NegGoal& g) const {
    const Atom& a = g.atoms.begin()->second;
    for (const ExistenceProperty* p :
         store_.lookup(a.pred, a.arity(), {ExistenceProperty::Kind::Exists})) {
        TypeEnv all = ctx.env;
        for (const auto& [v, t] : g.locals) all.set(v, t);
        std::map<std::string, NormalType> bindings;
        bool ok = true;
        for (int pos = 1; pos <= p->arity && ok; ++pos) {
            const auto& slot = p->slots[(size_t)(pos - 1)];
            const Term& t = a.args[(size_t)(pos - 1)];
            if (slot.input) {
                for (VarId v : vars(t))
                    if (g.locals.count(v)) ok = false;
                if (!ok) break;
                match_type(type_of_or_top(t, all), slot.in_ty, bindings);
                if (!subtype(type_of_or_top(t, all), instantiate(slot.in_ty, bindings))) ok = false;
            }
        }
        std::set<VarId> seen;
        for (int pos = 1; pos <= p->arity && ok; ++pos) {
            const auto& slot = p->slots[(size_t)(pos - 1)];
            if (slot.input) continue;
            const Term& t = a.args[(size_t)(pos - 1)];
            if (!t.is_var() || !g.locals.count(t.var) || !seen.insert(t.var).second) {
                ok = false;
                break;
            }
            if (!subtype(instantiate(slot.exists_ty, bindings), g.locals.at(t.var))) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool Engine::try_rt(const GoalFormula& ctx, const NegGoal& g, Atom& replacement) const {
    const Atom& a = g.atoms.begin()->second;
    for (VarId v : vars(a))
        if (g.locals.count(v)) return false;
    for (const ExistenceProperty* p :
         store_.lookup(a.pred, a.arity(), {ExistenceProperty::Kind::Misc})) {
        bool ok = true;
        Substitution sub;
        for (size_t i = 0; i < a.args.size() && ok; ++i) {
            VarId tmpl = p->misc_lhs.args[i].var;
            if (!subtype(type_of_or_top(a.args[i], ctx.env), p->misc_env.type_of_var(tmpl)))
                ok = false;
            else
                sub[tmpl] = a.args[i];
        }
        if (ok) {
            replacement = negsimp::apply(sub, p->misc_rhs);
            return true;
        }
    }
    return false;
}

std::vector<GoalFormula> Engine::step(const GoalFormula& ctx, size_t li) {
    if (li >= ctx.lits.size() || ctx.lits[li].kind != Literal::Kind::Neg)
        throw EngineError("step target is not a negation literal");
    const NegGoal& g = ctx.lits[li].neg;

    auto drop_literal = [&](const char* why) {
        GoalFormula child = ctx;
        child.lits.erase(child.lits.begin() + (long)li);
        if (opt_.trace) trace_.push_back(std::string("negation removed: ") + why);
        return std::vector<GoalFormula>{child};
    };

    // A bound variable with an empty type makes the negation hold.
    for (const auto& [v, t] : g.locals)
        if (is_empty(t)) return drop_literal("bound variable of empty type");

    if (g.atoms.empty()) {
        if (opt_.trace) trace_.push_back("neg(empty, empty) is false");
        return {};
    }

    if (g.atoms.size() == 1) {
        if (try_et(ctx, g)) {
            if (opt_.trace) trace_.push_back("ET: negation of " + g.atoms.begin()->second.pred + " is false");
            return {};
        }
        Atom rep;
        if (try_rt(ctx, g, rep)) {
            GoalFormula child = ctx;
            child.lits[li] = Literal::mk_atom(rep);
            if (opt_.trace) trace_.push_back("RT: replaced negation of " + g.atoms.begin()->second.pred);
            return {child};
        }
    }

    if (g.checklist.empty()) {
        GoalFormula child = ctx;
        child.lits[li].neg.done = true;
        if (opt_.trace) trace_.push_back("negation converged (residual)");
        return {child};
    }

    int head = g.checklist.front();
    const Atom& a = g.atoms.at(head);
    ++counts_.tests_total;

    std::vector<std::pair<const ExistenceProperty*, bool>> cands;
    for (const ExistenceProperty* p : store_.lookup(a.pred, a.arity(), {ExistenceProperty::Kind::Eu}))
        cands.emplace_back(p, false);
    if (!a.eq_functor.empty())
        for (const auto& p : store_.chan_family(a.arity()))
            if (p.kind == ExistenceProperty::Kind::Eu) cands.emplace_back(&p, false);
    for (const ExistenceProperty* p : store_.lookup(a.pred, a.arity(), {ExistenceProperty::Kind::Es}))
        cands.emplace_back(p, true);
    if (!a.eq_functor.empty())
        for (const auto& p : store_.chan_family(a.arity()))
            if (p.kind == ExistenceProperty::Kind::Es) cands.emplace_back(&p, true);

    for (const auto& [p, es] : cands) {
        auto r = sqvt(session_, *p, a, g.locals, ctx.env);
        if (!r) continue;
        // An es extraction that neither frees a variable nor replaces an
        // argument reproduces the goal; treat the property as inapplicable.
        if (es && g.atoms.size() == 1 && r->s_tilde.empty() && r->w_bar.empty()) continue;
        if (opt_.trace)
            trace_.push_back(std::string(es ? "SVT" : "QVT") + " on " + a.pred + "/" +
                             std::to_string(a.arity()) + ", " + std::to_string(r->J.size()) +
                             " relevant indices");
        return build_children(ctx, li, head, *r, es);
    }

    ++counts_.tests_futile;
    GoalFormula child = ctx;
    child.lits[li].neg.checklist.pop_front();
    if (opt_.trace) trace_.push_back("skip: no property applies to " + a.pred + "/" + std::to_string(a.arity()));
    return {child};
}

std::vector<GoalFormula> Engine::build_children(const GoalFormula& ctx, size_t li, int head_id,
                                                const SqvtResult& r, bool es) {
    const NegGoal& g = ctx.lits[li].neg;

    std::set<VarId> promoted;
    for (const auto& [pos, t] : r.r_bar) promoted.insert(t.var);
    for (VarId v : r.w_bar) promoted.insert(v);

    std::deque<int> phi(g.checklist);
    phi.pop_front();
    if (opt_.naive) {
        phi.clear();
        for (const auto& [id, a] : g.atoms)
            if (id != head_id) phi.push_back(id);
    } else {
        for (const auto& [id, a] : g.atoms)
            if (id != head_id && digraph_link(g, id, promoted) &&
                std::find(phi.begin(), phi.end(), id) == phi.end())
                phi.push_back(id);
    }

    NegGoal base;
    base.atoms = g.atoms;
    base.atoms.erase(head_id);
    base.locals = g.locals;
    for (VarId v : promoted) base.locals.erase(v);
    base.checklist = phi;

    const size_t ncopies = r.x_copies.size();
    if (ncopies == 0) {  // conjunction over no relevant indices is true
        GoalFormula child = ctx;
        child.lits.erase(child.lits.begin() + (long)li);
        return {child};
    }

    struct Option {
        std::vector<Literal> lits;
        std::vector<std::pair<Term, Term>> pos_eqs;
    };
    std::vector<std::vector<Option>> per_copy;
    std::map<VarId, NormalType> created = r.new_var_types;

    for (size_t i = 0; i < ncopies; ++i) {
        int j = r.J[i];
        Substitution sub_x;
        for (const auto& [pos, t] : r.xbar) sub_x[t.var] = r.x_copies[i].at(pos);
        Substitution sub_w;
        std::vector<std::pair<VarId, NormalType>> wprime;
        for (VarId v : r.w_bar) {
            VarId nv = session_.fresh(session_.name_of(v) + std::to_string(j));
            NormalType t = g.locals.at(v);
            created.emplace(nv, t);
            wprime.emplace_back(nv, t);
            sub_w[v] = Term::mkvar(nv);
        }

        Atom gp = negsimp::apply(sub_x, r.g_prime);
        std::vector<std::pair<Term, Term>> eqs;  // (s side, copy side)
        for (const auto& [pos, t] : r.s_tilde)
            eqs.emplace_back(negsimp::apply(sub_x, negsimp::apply(sub_w, t)), negsimp::apply(sub_x, r.z_bar.at(pos)));

        std::vector<Option> opts;
        if (es) {
            NegGoal d0;
            d0.atoms.emplace(0, gp);
            d0.checklist.push_back(0);
            for (const auto& [pos, t] : r.x_copies[i]) d0.locals[t.var] = r.new_var_types.at(t.var);
            opts.push_back({{Literal::mk_neg(d0)}, {}});
        }
        if (!r.s_tilde.empty()) {
            NegEqLit ne;
            ne.bound = wprime;
            for (const auto& [l, rr] : eqs) {
                ne.a.push_back(rr);
                ne.b.push_back(l);
            }
            opts.push_back({{Literal::mk_atom(gp), Literal::mk_neg_eq(ne)}, {}});
        }
        if (!base.atoms.empty()) {
            Option o;
            o.lits.push_back(Literal::mk_atom(gp));
            o.pos_eqs = eqs;
            NegGoal res = base;
            for (auto& [id, at] : res.atoms) at = negsimp::apply(sub_x, negsimp::apply(sub_w, at));
            o.lits.push_back(Literal::mk_neg(res));
            opts.push_back(std::move(o));
        }
        // else the last disjunct carries neg(empty) and is dropped
        if (opts.empty()) return {};
        per_copy.push_back(std::move(opts));
    }

    std::vector<GoalFormula> out;
    std::vector<size_t> choice(ncopies, 0);
    for (;;) {
        GoalFormula child;
        child.env = ctx.env;
        for (const auto& [v, t] : created) child.env.set(v, t);
        std::vector<std::pair<Term, Term>> eqs;
        child.lits.assign(ctx.lits.begin(), ctx.lits.begin() + (long)li);
        for (size_t i = 0; i < ncopies; ++i) {
            const Option& o = per_copy[i][choice[i]];
            child.lits.insert(child.lits.end(), o.lits.begin(), o.lits.end());
            eqs.insert(eqs.end(), o.pos_eqs.begin(), o.pos_eqs.end());
        }
        child.lits.insert(child.lits.end(), ctx.lits.begin() + (long)li + 1, ctx.lits.end());

        if (solve_positives(child, eqs) && simplify_negeqs(child)) out.push_back(std::move(child));

        // next combination, last copy varying fastest
        size_t k = ncopies;
        while (k > 0) {
            --k;
            if (++choice[k] < per_copy[k].size()) break;
            choice[k] = 0;
            if (k == 0) return out;
        }
    }
}

Frontier Engine::to_frontier(GoalFormula g0) {
    Frontier out;
    std::deque<GoalFormula> work;
    work.push_back(std::move(g0));
    while (!work.empty()) {
        GoalFormula f = std::move(work.front());
        work.pop_front();
        bool falsified = false;
        size_t li = f.lits.size();
        for (size_t i = 0; i < f.lits.size(); ++i) {
            if (f.lits[i].kind == Literal::Kind::False) {
                falsified = true;
                break;
            }
            if (f.lits[i].kind == Literal::Kind::Neg && !f.lits[i].neg.converged() && li == f.lits.size())
                li = i;
        }
        if (falsified) continue;
        if (li == f.lits.size()) {
            out.forms.push_back(std::move(f));
            continue;
        }
        if (out.steps >= opt_.max_steps) {
            out.complete = false;
            break;
        }
        ++out.steps;
        for (auto& c : step(f, li)) work.push_back(std::move(c));
    }
    return out;
}

}  // namespace negsimp
