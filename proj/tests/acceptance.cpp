// Acceptance gate: ten end-to-end checks, one [PASS]/[FAIL] line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negsimp/alpha.hpp"
#include "negsimp/oracle.hpp"
#include "negsimp/parse.hpp"
#include "negsimp/print.hpp"

using namespace negsimp;
using Clock = std::chrono::steady_clock;

namespace {

struct CheckFail {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw CheckFail{what};
}

long long g_violations = 0;
long long g_sqvt_calls = 0;

void tally(const Session& s) {
    g_violations += s.counters().theorem_violations;
    g_sqvt_calls += s.counters().sqvt_calls;
}

NormalType posint() { return NormalType::ints({IntIv{false, true, 1, 0}}); }

GoalFormula goal_formula(const std::string& text, Session& s) {
    ParsedGoal p = parse_goal(text, s);
    GoalFormula f;
    f.env = p.env;
    f.lits.push_back(Literal::mk_neg(init_neg(p.conj, p.locals)));
    return f;
}

GoalFormula pos_formula(const std::string& text, Session& s) {
    ParsedGoal p = parse_goal(text, s);
    GoalFormula f;
    f.env = p.env;
    for (auto& a : p.conj) f.lits.push_back(Literal::mk_atom(a));
    return f;
}

PropertyStore seeded() {
    PropertyStore st;
    seed_builtins(st);
    return st;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// 1. Extraction on sq under the square existence property, exact shape.
void criterion1() {
    PropertyStore st = seeded();
    Session s;
    VarId x = s.intern("X"), y = s.intern("Y");
    Atom g{"sq", {Term::mkvar(x), Term::mkvar(y)}, ""};
    std::map<VarId, NormalType> locals{{x, NormalType::int_range(0, 20)}};
    TypeEnv env;
    env.set(y, posint());
    auto es = st.lookup("sq", 2, {ExistenceProperty::Kind::Es});
    expect(es.size() == 1, "one es property for sq");

    auto t0 = Clock::now();
    auto r = sqvt(s, *es[0], g, locals, env);
    double ms = ms_since(t0);
    expect(r.has_value(), "extraction succeeds");
    expect(r->J == std::vector<int>{2}, "relevant index set is {2}");
    expect(r->g_prime.pred == "sq" && r->g_prime.args[0].is_var() &&
               r->g_prime.args[0].var != x && r->g_prime.args[1] == Term::mkvar(y),
           "G' replaces x with a fresh variable");
    expect(r->new_var_types.at(r->g_prime.args[0].var).base == NormalType::Base::Top,
           "replacement typed top");
    expect(r->s_tilde.size() == 1 && r->s_tilde.at(1) == Term::mkvar(x),
           "displaced sequence is <x>");
    expect(r->r_bar.empty(), "kept outputs empty");
    expect(r->w_bar == std::vector<VarId>{x}, "consumed locals {x}");
    expect(r->x_copies.size() == 1, "one fresh copy");
    expect(equiv(r->new_var_types.at(r->x_copies[0].at(1).var), posint()),
           "copy typed posint");
    expect(ms < 1.0, "under 1 ms");
    tally(s);
}

// 2. One rewrite step moves append out of the negation.
void criterion2() {
    Session s;
    PropertyStore st;
    for (auto& p : parse_properties(
             "eu(append(i(list(beta)),i(list(beta)),o([(1,list(beta))])),[1])."))
        st.declare(std::move(p));
    Engine e(s, st);
    GoalFormula f = goal_formula("neg([Z],(append(X:list(real),Y:list(real),Z),p(Z))).", s);
    auto cs = e.step(f, 0);
    expect(cs.size() == 1, "exactly one child");
    expect(cs[0].lits.size() == 2, "two literals");
    expect(cs[0].lits[0].kind == Literal::Kind::Atom && cs[0].lits[0].atom.pred == "append",
           "append becomes positive");
    VarId z1 = cs[0].lits[0].atom.args[2].var;
    expect(z1 != s.id_of("Z"), "output renamed");
    expect(equiv(cs[0].env.type_of_var(z1), NormalType::list(NormalType::all_real())),
           "output typed list(real)");
    expect(cs[0].lits[1].kind == Literal::Kind::Neg && cs[0].lits[1].neg.locals.empty() &&
               cs[0].lits[1].neg.atoms.size() == 1 &&
               cs[0].lits[1].neg.atoms.begin()->second.args[0] == Term::mkvar(z1),
           "residual negation is neg(p(z'))");
    tally(s);
}

// 3. Splitting on the two-subtype square property yields three disjuncts.
void criterion3() {
    Session s;
    PropertyStore st;
    for (auto& p : parse_properties("es(sq(o([(1,negint),(2,posint)]),i(posint)),[1,2])."))
        st.declare(std::move(p));
    Engine e(s, st);
    GoalFormula f = goal_formula("neg([X:int(0,20)],(sq(X,Y:posint),b(X))).", s);
    auto cs = e.step(f, 0);
    expect(cs.size() == 3, "three children");

    expect(cs[0].lits.size() == 1 && cs[0].lits[0].kind == Literal::Kind::Neg &&
               cs[0].lits[0].neg.atoms.size() == 1 && cs[0].lits[0].neg.locals.size() == 1 &&
               equiv(cs[0].lits[0].neg.locals.begin()->second, posint()),
           "first child: no positive square root at all");

    expect(cs[1].lits.size() == 1 && cs[1].lits[0].kind == Literal::Kind::Atom,
           "second child is a single positive atom");
    expect(equiv(cs[1].env.type_of_var(cs[1].lits[0].atom.args[0].var),
                 NormalType::ints({IntIv{false, true, 21, 0}})),
           "second child root restricted past 20");

    expect(cs[2].lits.size() == 2 && cs[2].lits[0].kind == Literal::Kind::Atom &&
               cs[2].lits[1].kind == Literal::Kind::Neg,
           "third child keeps the residual negation");
    expect(equiv(cs[2].env.type_of_var(cs[2].lits[0].atom.args[0].var),
                 NormalType::int_range(1, 20)),
           "third child root in int(1,20)");
    expect(cs[2].lits[1].neg.atoms.begin()->second.pred == "b", "residual atom is b");
    tally(s);
}

// 4. The square-and-shift goal reaches its four-way negation-free frontier.
void criterion4() {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    GoalFormula f0 = goal_formula(
        "neg([X:real(-20,20),U:real(0,pinf)],(sq(X,Y:real(o(0),pinf)),add(X,U,-1))).", s);
    auto t0 = Clock::now();
    Frontier fr = e.to_frontier(f0);
    double ms = ms_since(t0);
    expect(fr.complete, "frontier complete");
    expect(fr.forms.size() == 4, "four conjunctions");
    for (const auto& f : fr.forms)
        for (const auto& l : f.lits)
            expect(l.kind == Literal::Kind::Atom, "no residual negations");

    Session t;
    Frontier want;
    want.forms.push_back(pos_formula(
        "neg([],(sq(Z1:real(minf,o(-20)),Y:real(o(0),pinf)),sq(Z2:real(o(20),pinf),Y))).", t));
    want.forms.push_back(pos_formula(
        "neg([],(sq(Z1:real(minf,o(-20)),Y:real(o(0),pinf)),sq(Z2:real(o(0),20),Y),"
        "add(Z2,V2:real(minf,o(0)),-1))).", t));
    want.forms.push_back(pos_formula(
        "neg([],(sq(Z1:real(-20,o(0)),Y:real(o(0),pinf)),add(Z1,V1:real(minf,o(0)),-1),"
        "sq(Z2:real(o(20),pinf),Y))).", t));
    want.forms.push_back(pos_formula(
        "neg([],(sq(Z1:real(-20,o(0)),Y:real(o(0),pinf)),add(Z1,V1:real(minf,o(0)),-1),"
        "sq(Z2:real(o(0),20),Y),add(Z2,V2:real(minf,o(0)),-1))).", t));
    expect(alpha_equal_frontier(fr, want), "frontier alpha-equal to the expected four forms");
    expect(ms < 100.0, "under 100 ms");
    tally(s);
}

// 5. Chain family test counts, worklist versus naive rescanning.
void criterion5() {
    auto t0 = Clock::now();
    for (int n : {5, 10, 20}) {
        std::string atoms, locals;
        for (int i = 1; i <= n; ++i) {
            if (i > 1) atoms += ",", locals += ",";
            atoms += "p(X" + std::to_string(i) + ",X" + std::to_string(i + 1) + ")";
            locals += "X" + std::to_string(i);
        }
        std::string goal = "neg([" + locals + "],(" + atoms + ")).";
        for (bool naive : {false, true}) {
            Session s;
            PropertyStore st;
            for (auto& p : parse_properties("eu(p(o([(1,top)]),i(top)),[1])."))
                st.declare(std::move(p));
            EngineOptions opt;
            opt.naive = naive;
            Engine e(s, st, opt);
            Frontier fr = e.to_frontier(goal_formula(goal, s));
            expect(fr.complete && fr.forms.empty(),
                   "n=" + std::to_string(n) + " collapses to false");
            if (naive)
                expect(e.counts().tests_futile == n * (n - 1) / 2,
                       "naive futile count n=" + std::to_string(n));
            else
                expect(e.counts().tests_total == 2 * n - 1,
                       "worklist test count n=" + std::to_string(n));
            tally(s);
        }
    }
    expect(ms_since(t0) < 1000.0, "under 1 s through n=20");
}

// 6. The two interactive-session queries, literal multisets up to renaming.
void criterion6() {
    {
        Session s;
        PropertyStore st = seeded();
        Engine e(s, st);
        Frontier fr = e.to_frontier(goal_formula(
            "neg([U,V],(sq(X:real(-0.5,0.5),U),sq(Y:real(-1,1),V),add(U,V,W:real(0,1)))).", s));
        expect(fr.complete && fr.forms.size() == 1, "query one: single form");
        bool has_negeq = false;
        for (const auto& l : fr.forms[0].lits) has_negeq |= l.kind == Literal::Kind::NegEq;
        expect(has_negeq, "query one: residual disequality present");

        Session t;
        GoalFormula want = pos_formula(
            "neg([],(sq(X:real(-0.5,0.5),U1:real),sq(Y:real(-1,1),V1:real),"
            "add(Z:real,V1,W:real(0,1)))).", t);
        NegEqLit ne;
        ne.a.push_back(Term::mkvar(t.id_of("Z")));
        ne.b.push_back(Term::mkvar(t.id_of("U1")));
        want.lits.push_back(Literal::mk_neg_eq(ne));
        expect(alpha_equal(fr.forms[0], want), "query one matches the printed answer");
        tally(s);
    }
    {
        Session s;
        PropertyStore st = seeded();
        for (auto& p : parse_properties(
                 "eu(append(i(list(beta)),i(list(beta)),o([(1,list(beta))])),[1])."
                 "eu(sort(i(list(gamma)),o([(1,list(gamma))])),[1])."))
            st.declare(std::move(p));
        Engine e(s, st);
        Frontier fr = e.to_frontier(goal_formula(
            "neg([W,Z],(append(X:list(real),Y:list(real),Z),sort(Z,W),b(W))).", s));
        expect(fr.complete && fr.forms.size() == 1, "query two: single form");

        Session t;
        ParsedGoal p = parse_goal(
            "neg([],(append(X:list(real),Y:list(real),Z1:list(real)),"
            "sort(Z1,W1:list(real)))).", t);
        GoalFormula want;
        want.env = p.env;
        for (auto& a : p.conj) want.lits.push_back(Literal::mk_atom(a));
        std::map<int, Atom> residual{{0, Atom{"b", {Term::mkvar(t.id_of("W1"))}, ""}}};
        want.lits.push_back(Literal::mk_neg(init_neg({residual.at(0)}, {})));
        expect(alpha_equal(fr.forms[0], want), "query two matches the printed answer");
        tally(s);
    }
}

// 7. Random goals over integer-specialized properties stay equivalent
//    on a finite model that is closed by construction.
void criterion7() {
    auto t0 = Clock::now();
    FiniteModel m;
    for (long long v = -8; v <= 8; ++v) m.add_value(GroundValue::of_int(v));
    m.builtins["sq"] = "sq";
    m.builtins["add"] = "add";
    m.builtins["lt"] = "lt";
    m.builtins["geq"] = "geq";

    const std::string props =
        "eu(sq(i(int(-2,2)),o([(1,int(0,4))])),[1])."
        "eu(add(i(int(-2,2)),i(int(-2,2)),o([(1,int(-4,4))])),[1])."
        "eu(add(i(int(-2,2)),o([(1,int(-4,4))]),i(int(-2,2))),[1])."
        "eu(add(o([(1,int(-4,4))]),i(int(-2,2)),i(int(-2,2))),[1])."
        "misc(lt(A:int,B:int) <~> geq(A,B)).";

    std::mt19937 rng(20260825);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    for (int iter = 0; iter < 200; ++iter) {
        int nloc = pick(1, 3), nglob = pick(1, 3), natoms = pick(1, 4);
        std::vector<std::string> vars;
        std::ostringstream goal;
        goal << "neg([";
        for (int i = 0; i < nloc; ++i) {
            std::string v = "L" + std::to_string(i);
            int a = pick(-2, 2), b = pick(a, 2);
            if (i) goal << ",";
            goal << v << ":int(" << a << "," << b << ")";
            vars.push_back(v);
        }
        goal << "],(";
        std::vector<std::string> gvars;
        for (int i = 0; i < nglob; ++i) gvars.push_back("G" + std::to_string(i));
        auto arg = [&](bool first_mention_ok) {
            int r = pick(0, 9);
            if (r < 4) return vars[pick(0, (int)vars.size() - 1)];
            if (r < 8 && first_mention_ok) {
                std::string v = gvars[pick(0, (int)gvars.size() - 1)];
                int a = pick(-2, 2), b = pick(a, 2);
                return v + "__" + std::to_string(a) + "_" + std::to_string(b);
            }
            return std::to_string(pick(-2, 2));
        };
        std::map<std::string, std::pair<int, int>> gseen;
        auto emit_arg = [&](std::ostringstream& os) {
            std::string a = arg(true);
            auto sep = a.find("__");
            if (sep == std::string::npos) {
                os << a;
                return;
            }
            std::string name = a.substr(0, sep);
            std::string rest = a.substr(sep + 2);
            auto us = rest.find('_');
            int lo = std::stoi(rest.substr(0, us)), hi = std::stoi(rest.substr(us + 1));
            if (gseen.count(name)) {
                os << name;  // keep the first annotation
            } else {
                gseen[name] = {lo, hi};
                os << name << ":int(" << lo << "," << hi << ")";
            }
        };
        for (int i = 0; i < natoms; ++i) {
            if (i) goal << ",";
            int p = pick(0, 2);
            if (p == 0) {
                goal << "sq(";
                emit_arg(goal);
                goal << ",";
                emit_arg(goal);
                goal << ")";
            } else if (p == 1) {
                goal << "add(";
                emit_arg(goal);
                goal << ",";
                emit_arg(goal);
                goal << ",";
                emit_arg(goal);
                goal << ")";
            } else {
                goal << "lt(";
                emit_arg(goal);
                goal << ",";
                emit_arg(goal);
                goal << ")";
            }
        }
        goal << ")).";

        Session s;
        PropertyStore st;
        for (auto& pr : parse_properties(props)) st.declare(std::move(pr));
        Engine e(s, st);
        GoalFormula before = goal_formula(goal.str(), s);
        Frontier fr = e.to_frontier(before);
        expect(fr.complete, "goal " + std::to_string(iter) + " terminates: " + goal.str());
        Verdict v = check_equivalence(before, fr.forms, m, s);
        expect(v.pass(), "goal " + std::to_string(iter) + " equivalent on the model: " +
                             goal.str() + " [" + v.witness + "]");
        tally(s);
    }
    expect(ms_since(t0) < 30000.0, "under 30 s");
}

// 8. Property audits on finite integer carriers.
void criterion8() {
    PropertyStore st = seeded();
    FiniteModel m;
    for (long long v = -10; v <= 10; ++v) m.add_value(GroundValue::of_int(v));
    m.builtins["sq"] = "sq";
    m.builtins["add"] = "add";
    m.builtins["lt"] = "lt";
    m.builtins["geq"] = "geq";

    auto sq_es = st.lookup("sq", 2, {ExistenceProperty::Kind::Es});
    expect(sq_es.size() == 1 && audit_property(*sq_es[0], m).pass(),
           "square selective property passes");

    auto lt_misc = st.lookup("lt", 2, {ExistenceProperty::Kind::Misc});
    expect(lt_misc.size() == 1 && audit_property(*lt_misc[0], m).pass(),
           "ordering complement passes");

    FiniteModel ms = m;
    ms.add_value(GroundValue::compound("s", {GroundValue::of_int(0)}));
    ms.add_value(GroundValue::compound("s", {GroundValue::of_int(1)}));
    const auto& fam = st.chan_family(2);
    expect(fam.size() >= 2 && audit_property(fam[1], ms).pass(),
           "equation family selective member passes");

    auto add_eu = st.lookup("add", 3, {ExistenceProperty::Kind::Eu});
    expect(add_eu.size() == 3, "three add directions");
    FiniteModel small;
    for (long long v = -2; v <= 2; ++v) small.add_value(GroundValue::of_int(v));
    small.builtins["add"] = "add";
    Verdict v = audit_property(*add_eu[2], small);
    expect(v.status == Verdict::Status::Boundary,
           "truncated carrier reports a boundary, not a violation");
}

// 9. Zero extraction-theorem assertion failures across the whole run.
void criterion9() {
    expect(g_sqvt_calls > 0, "the corpus exercised the extractor");
    expect(g_violations == 0, "no theorem assertion failures in " +
                                  std::to_string(g_sqvt_calls) + " calls");
}

// 10. Per-call work stays linear in the atom; the chain counts of
//     criterion 5 stand in for the asymptotic claims.
void criterion10() {
    std::vector<long long> visits;
    for (int n : {2, 4, 8, 16}) {
        Session s;
        PropertyStore st;
        std::ostringstream ps;
        ps << "eu(q" << n << "(o([(1,top)])";
        for (int i = 1; i < n; ++i) ps << ",i(top)";
        ps << "),[1]).";
        for (auto& p : parse_properties(ps.str())) st.declare(std::move(p));

        std::vector<Term> args;
        std::map<VarId, NormalType> locals;
        args.push_back(Term::mkvar(s.intern("Z")));
        locals.emplace(args[0].var, NormalType::top());
        TypeEnv env;
        for (int i = 1; i < n; ++i) {
            VarId v = s.intern("V" + std::to_string(i));
            env.set(v, NormalType::top());
            args.push_back(Term::mkvar(v));
        }
        Atom g{"q" + std::to_string(n), std::move(args), ""};
        auto props = st.lookup(g.pred, n, {ExistenceProperty::Kind::Eu});
        expect(props.size() == 1 && sqvt(s, *props[0], g, locals, env).has_value(),
               "arity " + std::to_string(n) + " extraction succeeds");
        visits.push_back(s.counters().last_call_slot_visits);
        expect(s.counters().last_call_slot_visits <= 8LL * n,
               "slot visits bounded by a small multiple of the arity");
        tally(s);
    }
    // doubling the arity at most doubles the work, within slack
    for (size_t i = 1; i < visits.size(); ++i)
        expect(visits[i] <= 3 * visits[i - 1],
               "slot visits grow at most linearly");
}

}  // namespace

int main() {
    struct Item {
        int n;
        const char* label;
        std::function<void()> run;
    };
    std::vector<Item> items = {
        {1, "extraction golden call", criterion1},
        {2, "unique-output rewrite in one step", criterion2},
        {3, "selective split into three disjuncts", criterion3},
        {4, "end-to-end negation-free frontier", criterion4},
        {5, "chain family test counts", criterion5},
        {6, "session query fidelity", criterion6},
        {7, "random goal equivalence on a finite model", criterion7},
        {8, "property audits", criterion8},
        {9, "extraction invariants hold corpus-wide", criterion9},
        {10, "per-call linearity bound", criterion10},
    };
    int failures = 0;
    for (auto& it : items) {
        try {
            it.run();
            std::printf("[PASS] criterion %d: %s\n", it.n, it.label);
        } catch (const CheckFail& f) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%s)\n", it.n, it.label, f.what.c_str());
        } catch (const std::exception& ex) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (unexpected: %s)\n", it.n, it.label, ex.what());
        }
    }
    return failures == 0 ? 0 : 1;
}
