#include "negsimp/oracle.hpp"

#include <algorithm>
#include <functional>

#include "negsimp/print.hpp"

namespace negsimp {

namespace {

GroundValue ground_compound(const std::string& f, std::vector<GroundValue> args) {
    if (f == "[]" && args.empty()) return GroundValue::of_list({});
    if (f == "." && args.size() == 2 && args[1].kind == GroundValue::Kind::List) {
        std::vector<GroundValue> items;
        items.push_back(args[0]);
        for (auto& v : args[1].items) items.push_back(v);
        return GroundValue::of_list(std::move(items));
    }
    return GroundValue::compound(f, std::move(args));
}

GroundValue eval_term(const Term& t, const Assignment& asg) {
    switch (t.kind) {
        case Term::Kind::Var: {
            auto it = asg.find(t.var);
            if (it == asg.end()) throw OracleError("unbound variable in evaluation");
            return it->second;
        }
        case Term::Kind::Num:
            return t.num_int ? GroundValue::of_int((long long)t.num) : GroundValue::of_real(t.num);
        case Term::Kind::Compound: {
            std::vector<GroundValue> args;
            for (const auto& a : t.args) args.push_back(eval_term(a, asg));
            return ground_compound(t.functor, std::move(args));
        }
    }
    throw OracleError("unreachable");
}

// Enumerates assignments of `vars` over their domains, invoking fn for
// each; fn returning true stops the enumeration early.
bool enumerate(const std::vector<std::pair<VarId, std::vector<GroundValue>>>& doms,
               Assignment& asg, const std::function<bool()>& fn, size_t i = 0) {
    if (i == doms.size()) return fn();
    for (const auto& v : doms[i].second) {
        asg[doms[i].first] = v;
        if (enumerate(doms, asg, fn, i + 1)) {
            asg.erase(doms[i].first);
            return true;
        }
    }
    asg.erase(doms[i].first);
    return false;
}

}  // namespace

void FiniteModel::add_value(const GroundValue& v) {
    if (std::find(universe.begin(), universe.end(), v) == universe.end()) universe.push_back(v);
}

std::vector<GroundValue> FiniteModel::carrier(const NormalType& t) const {
    std::vector<GroundValue> out;
    for (const auto& v : universe)
        if (member(v, t)) out.push_back(v);
    return out;
}

bool FiniteModel::atom_true(const std::string& pred, const std::string& eq_functor,
                            const std::vector<GroundValue>& args) const {
    if (!eq_functor.empty()) {
        std::vector<GroundValue> rest(args.begin() + 1, args.end());
        return args[0] == ground_compound(eq_functor, std::move(rest));
    }
    auto bi = builtins.find(pred);
    if (bi != builtins.end()) {
        auto num = [&](size_t i) {
            if (!args[i].is_numeric()) throw OracleError("non-numeric argument to " + pred);
            return args[i].num();
        };
        if (bi->second == "sq" && args.size() == 2) return num(1) == num(0) * num(0);
        if (bi->second == "add" && args.size() == 3) return num(0) + num(1) == num(2);
        if (bi->second == "lt" && args.size() == 2) return num(0) < num(1);
        if (bi->second == "geq" && args.size() == 2) return num(0) >= num(1);
        throw OracleError("builtin " + bi->second + " does not take " + std::to_string(args.size()) +
                          " arguments");
    }
    auto ext = extensions.find({pred, (int)args.size()});
    if (ext != extensions.end()) return ext->second.count(args) != 0;
    throw OracleError("no semantics for " + pred + "/" + std::to_string(args.size()));
}

bool eval(const GoalFormula& f, const Assignment& asg0, const FiniteModel& m) {
    Assignment asg = asg0;
    for (VarId v : global_vars(f)) {
        auto it = asg.find(v);
        if (it == asg.end()) throw OracleError("assignment misses a global variable");
        if (f.env.has(v) && !member(it->second, f.env.type_of_var(v))) return false;
    }
    auto atom_holds = [&](const Atom& a, const Assignment& env) {
        std::vector<GroundValue> args;
        for (const auto& t : a.args) args.push_back(eval_term(t, env));
        return m.atom_true(a.pred, a.eq_functor, args);
    };
    for (const auto& lit : f.lits) {
        switch (lit.kind) {
            case Literal::Kind::False: return false;
            case Literal::Kind::Atom:
                if (!atom_holds(lit.atom, asg)) return false;
                break;
            case Literal::Kind::Neg: {
                std::vector<std::pair<VarId, std::vector<GroundValue>>> doms;
                for (const auto& [v, t] : lit.neg.locals) doms.emplace_back(v, m.carrier(t));
                bool witness = enumerate(doms, asg, [&] {
                    for (const auto& [id, a] : lit.neg.atoms)
                        if (!atom_holds(a, asg)) return false;
                    return true;
                });
                if (witness) return false;
                break;
            }
            case Literal::Kind::NegEq: {
                std::vector<std::pair<VarId, std::vector<GroundValue>>> doms;
                for (const auto& [v, t] : lit.neg_eq.bound) doms.emplace_back(v, m.carrier(t));
                bool witness = enumerate(doms, asg, [&] {
                    for (size_t i = 0; i < lit.neg_eq.a.size(); ++i)
                        if (!(eval_term(lit.neg_eq.a[i], asg) == eval_term(lit.neg_eq.b[i], asg)))
                            return false;
                    return true;
                });
                if (witness) return false;
                break;
            }
        }
    }
    return true;
}

Verdict check_equivalence(const GoalFormula& before, const std::vector<GoalFormula>& after,
                          const FiniteModel& m, const Session& s) {
    if (m.universe.empty()) throw OracleError("empty universe");
    std::set<VarId> shared = global_vars(before);
    struct AfterInfo {
        const GoalFormula* f;
        std::vector<std::pair<VarId, std::vector<GroundValue>>> extras;
    };
    std::vector<AfterInfo> infos;
    for (const auto& f : after) {
        AfterInfo info{&f, {}};
        for (VarId v : global_vars(f))
            if (!shared.count(v)) info.extras.emplace_back(v, m.universe);
        infos.push_back(std::move(info));
    }

    // Shared globals range over their declared type; the equivalence
    // claim is relative to the typing of the original goal.
    std::vector<std::pair<VarId, std::vector<GroundValue>>> doms;
    for (VarId v : shared) {
        std::vector<GroundValue> dom =
            before.env.has(v) ? m.carrier(before.env.type_of_var(v)) : m.universe;
        doms.emplace_back(v, std::move(dom));
    }

    Verdict verdict;
    Assignment asg;
    enumerate(doms, asg, [&] {
        bool lhs = eval(before, asg, m);
        bool rhs = false;
        for (auto& info : infos) {
            Assignment inner = asg;
            rhs = enumerate(info.extras, inner, [&] { return eval(*info.f, inner, m); });
            if (rhs) break;
        }
        if (lhs != rhs) {
            verdict.status = Verdict::Status::Violation;
            std::string w;
            for (const auto& [v, g] : asg) w += s.name_of(v) + "=" + to_string(g) + " ";
            verdict.witness = w + "-> before=" + (lhs ? "true" : "false") +
                              " after=" + (rhs ? "true" : "false");
            return true;
        }
        return false;
    });
    return verdict;
}

Verdict audit_property(const ExistenceProperty& p, const FiniteModel& m) {
    using K = ExistenceProperty::Kind;
    Verdict verdict;
    auto bump = [&](Verdict::Status st, const std::string& w) {
        if ((int)st > (int)verdict.status) {
            verdict.status = st;
            verdict.witness = w;
        }
    };

    if (p.kind == K::Misc) {
        std::vector<std::pair<VarId, std::vector<GroundValue>>> doms;
        for (const auto& t : p.misc_lhs.args)
            doms.emplace_back(t.var, m.carrier(p.misc_env.type_of_var(t.var)));
        for (const auto& [v, d] : doms)
            if (d.empty()) throw OracleError("empty carrier for misc property input");
        Assignment asg;
        enumerate(doms, asg, [&] {
            std::vector<GroundValue> largs, rargs;
            for (const auto& t : p.misc_lhs.args) largs.push_back(eval_term(t, asg));
            for (const auto& t : p.misc_rhs.args) rargs.push_back(eval_term(t, asg));
            bool lhs = m.atom_true(p.misc_lhs.pred, p.misc_lhs.eq_functor, largs);
            bool rhs = m.atom_true(p.misc_rhs.pred, p.misc_rhs.eq_functor, rargs);
            if (lhs == rhs) {
                bump(Verdict::Status::Violation, "not " + p.misc_lhs.pred + " disagrees with " +
                                                     p.misc_rhs.pred);
                return true;
            }
            return false;
        });
        return verdict;
    }

    if (p.pred == "=") {
        // structural audit of the flat-equation family
        int n = p.arity - 1;
        bool forward = !p.slots[0].input;  // exactly one x per argument tuple
        for (const auto& v : m.universe) {
            if (v.kind != GroundValue::Kind::Compound || (int)v.items.size() != n) continue;
            for (const auto& item : v.items)
                if (std::find(m.universe.begin(), m.universe.end(), item) == m.universe.end())
                    bump(Verdict::Status::Boundary, "component of " + to_string(v) + " outside universe");
        }
        if (forward)
            bump(Verdict::Status::Boundary, "constructed terms leave any finite universe");
        return verdict;
    }

    bool builtin = m.builtins.count(p.pred) != 0;
    std::vector<int> in_pos, out_pos;
    for (int pos = 1; pos <= p.arity; ++pos)
        (p.slots[(size_t)(pos - 1)].input ? in_pos : out_pos).push_back(pos);

    std::vector<std::pair<VarId, std::vector<GroundValue>>> in_doms;
    for (int pos : in_pos) {
        auto c = m.carrier(p.slots[(size_t)(pos - 1)].in_ty);
        if (c.empty()) throw OracleError("empty carrier for input parameter of " + p.pred);
        in_doms.emplace_back(pos, c);  // positions double as variable ids here
    }
    std::vector<std::pair<VarId, std::vector<GroundValue>>> out_doms;
    for (int pos : out_pos) out_doms.emplace_back(pos, m.universe);

    Assignment asg;
    enumerate(in_doms, asg, [&] {
        auto args_of = [&](const Assignment& full) {
            std::vector<GroundValue> args((size_t)p.arity, GroundValue::of_int(0));
            for (const auto& [pos, v] : full) args[(size_t)(pos - 1)] = v;
            return args;
        };
        // completeness: every solution lies in some output subtype
        Assignment inner = asg;
        enumerate(out_doms, inner, [&] {
            if (!m.atom_true(p.pred, "", args_of(inner))) return false;
            bool covered = false;
            if (p.kind == K::Exists) {
                covered = true;
                for (int pos : out_pos)
                    if (!member(inner.at(pos), p.slots[(size_t)(pos - 1)].exists_ty)) covered = false;
            } else {
                for (int i : p.indices) {
                    bool all = true;
                    for (int pos : out_pos)
                        if (!member(inner.at(pos), p.slots[(size_t)(pos - 1)].out_tys.at(i)))
                            all = false;
                    if (all) covered = true;
                }
            }
            if (!covered) {
                bump(Verdict::Status::Violation, "solution outside every output subtype");
                return true;
            }
            return false;
        });

        auto count_in = [&](const std::function<bool(const Assignment&)>& in_subtype) {
            long long count = 0;
            Assignment walk = asg;
            enumerate(out_doms, walk, [&] {
                if (in_subtype(walk) && m.atom_true(p.pred, "", args_of(walk))) ++count;
                return false;
            });
            return count;
        };

        if (p.kind == K::Exists) {
            long long c = count_in([&](const Assignment& a) {
                for (int pos : out_pos)
                    if (!member(a.at(pos), p.slots[(size_t)(pos - 1)].exists_ty)) return false;
                return true;
            });
            if (c < 1) bump(builtin ? Verdict::Status::Boundary : Verdict::Status::Violation,
                            "no output in the universe for some input");
        } else {
            for (int i : p.indices) {
                long long c = count_in([&](const Assignment& a) {
                    for (int pos : out_pos)
                        if (!member(a.at(pos), p.slots[(size_t)(pos - 1)].out_tys.at(i))) return false;
                    return true;
                });
                if (p.kind == K::Eu) {
                    if (c > 1) bump(Verdict::Status::Violation, "several outputs in one subtype");
                    if (c == 0)
                        bump(builtin ? Verdict::Status::Boundary : Verdict::Status::Violation,
                             "no output in subtype " + std::to_string(i) + " for some input");
                } else if (c > 1) {
                    bump(Verdict::Status::Violation, "several outputs in one subtype");
                }
            }
        }
        return verdict.status == Verdict::Status::Violation;
    });
    return verdict;
}

}  // namespace negsimp
