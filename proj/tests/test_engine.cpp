#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "negsimp/alpha.hpp"
#include "negsimp/parse.hpp"
#include "negsimp/print.hpp"

using namespace negsimp;

namespace {

NormalType posint() { return NormalType::ints({IntIv{false, true, 1, 0}}); }

GoalFormula goal_formula(const std::string& text, Session& s) {
    ParsedGoal p = parse_goal(text, s);
    GoalFormula f;
    f.env = p.env;
    f.lits.push_back(Literal::mk_neg(init_neg(p.conj, p.locals)));
    return f;
}

// positive conjunction (empty locals list) as a plain formula, for
// building expected frontier members
GoalFormula pos_formula(const std::string& text, Session& s) {
    ParsedGoal p = parse_goal(text, s);
    REQUIRE(p.locals.empty());
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

}  // namespace

TEST_CASE("init_neg and the digraph") {
    Session s;
    ParsedGoal p = parse_goal("neg([X:real(-20,20),U:real(0,pinf)],(sq(X,Y:real(o(0),pinf)),add(X,U,-1))).", s);
    NegGoal g = init_neg(p.conj, p.locals);
    CHECK(g.atoms.size() == 2);
    CHECK(g.checklist == std::deque<int>{0, 1});
    CHECK_FALSE(g.converged());

    VarId x = s.id_of("X"), u = s.id_of("U"), y = s.id_of("Y");
    CHECK(digraph_link(g, 0, {x}));       // sq contains x
    CHECK_FALSE(digraph_link(g, 0, {u}));
    CHECK(digraph_link(g, 1, {x}));       // add contains x and u
    CHECK(digraph_link(g, 1, {u}));
    CHECK_FALSE(digraph_link(g, 0, {y}));  // y is global, no digraph node
    CHECK_THROWS_AS(digraph_link(g, 9, {x}), EngineError);

    digraph_delete(g, {0}, {x});
    CHECK(g.atoms.size() == 1);
    CHECK(g.locals.count(x) == 0);
    CHECK(g.checklist == std::deque<int>{1});
    CHECK_THROWS_AS(digraph_delete(g, {0}, {}), EngineError);

    NegGoal empty = init_neg({}, {});
    CHECK(empty.atoms.empty());
    CHECK(empty.checklist.empty());
}

TEST_CASE("step on the empty negation is false") {
    Session s;
    PropertyStore st;
    Engine e(s, st);
    GoalFormula f;
    f.lits.push_back(Literal::mk_neg(init_neg({}, {})));
    CHECK(e.step(f, 0).empty());

    // nonempty locals, empty conjunction: still not exists w.true
    std::map<VarId, NormalType> ls{{s.intern("W"), NormalType::top()}};
    GoalFormula f2;
    f2.lits.push_back(Literal::mk_neg(init_neg({}, ls)));
    CHECK(e.step(f2, 0).empty());
}

TEST_CASE("a bound variable of empty type deletes the negation") {
    Session s;
    PropertyStore st;
    Engine e(s, st);
    ParsedGoal p = parse_goal("neg([X:int(1,1) and not(int(1,1))],(q(X))).", s);
    GoalFormula f;
    f.lits.push_back(Literal::mk_neg(init_neg(p.conj, p.locals)));
    auto cs = e.step(f, 0);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].lits.empty());
}

TEST_CASE("QVT append single child") {
    Session s;
    PropertyStore st;
    for (auto& p : parse_properties(
             "eu(append(i(list(beta)),i(list(beta)),o([(1,list(beta))])),[1])."))
        st.declare(std::move(p));
    Engine e(s, st);
    GoalFormula f = goal_formula("neg([Z],(append(X:list(real),Y:list(real),Z),p(Z))).", s);

    auto cs = e.step(f, 0);
    REQUIRE(cs.size() == 1);
    REQUIRE(cs[0].lits.size() == 2);
    CHECK(cs[0].lits[0].kind == Literal::Kind::Atom);
    CHECK(cs[0].lits[0].atom.pred == "append");
    VarId z1 = cs[0].lits[0].atom.args[2].var;
    CHECK(z1 != s.id_of("Z"));
    CHECK(equiv(cs[0].env.type_of_var(z1), NormalType::list(NormalType::all_real())));
    REQUIRE(cs[0].lits[1].kind == Literal::Kind::Neg);
    CHECK(cs[0].lits[1].neg.atoms.size() == 1);
    CHECK(cs[0].lits[1].neg.atoms.begin()->second.pred == "p");
    CHECK(cs[0].lits[1].neg.atoms.begin()->second.args[0] == Term::mkvar(z1));
    CHECK(cs[0].lits[1].neg.locals.empty());
}

TEST_CASE("SVT yields the three displayed disjuncts") {
    Session s;
    PropertyStore st;
    for (auto& p : parse_properties("es(sq(o([(1,negint),(2,posint)]),i(posint)),[1,2])."))
        st.declare(std::move(p));
    Engine e(s, st);
    GoalFormula f = goal_formula("neg([X:int(0,20)],(sq(X,Y:posint),b(X))).", s);

    auto cs = e.step(f, 0);
    REQUIRE(cs.size() == 3);

    // first: not exists z2:posint. sq(z2,y)
    REQUIRE(cs[0].lits.size() == 1);
    REQUIRE(cs[0].lits[0].kind == Literal::Kind::Neg);
    const NegGoal& d0 = cs[0].lits[0].neg;
    REQUIRE(d0.atoms.size() == 1);
    CHECK(d0.atoms.begin()->second.pred == "sq");
    REQUIRE(d0.locals.size() == 1);
    CHECK(equiv(d0.locals.begin()->second, posint()));

    // second: sq(z2,y) with z2 restricted past the bound interval
    REQUIRE(cs[1].lits.size() == 1);
    REQUIRE(cs[1].lits[0].kind == Literal::Kind::Atom);
    VarId z2b = cs[1].lits[0].atom.args[0].var;
    CHECK(equiv(cs[1].env.type_of_var(z2b), NormalType::ints({IntIv{false, true, 21, 0}})));

    // third: sq(z2,y) and not b(z2), equality solved into int(1,20)
    REQUIRE(cs[2].lits.size() == 2);
    CHECK(cs[2].lits[0].kind == Literal::Kind::Atom);
    VarId z2c = cs[2].lits[0].atom.args[0].var;
    CHECK(equiv(cs[2].env.type_of_var(z2c), NormalType::int_range(1, 20)));
    REQUIRE(cs[2].lits[1].kind == Literal::Kind::Neg);
    CHECK(cs[2].lits[1].neg.atoms.begin()->second.pred == "b");
    CHECK(cs[2].lits[1].neg.atoms.begin()->second.args[0] == Term::mkvar(z2c));
}

TEST_CASE("QVT with two relevant indices spawns the DNF product") {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    GoalFormula f0 =
        goal_formula("neg([X:real(-20,20),U:real(0,pinf)],(sq(X,Y:real(o(0),pinf)),add(X,U,-1))).", s);
    auto cs = e.step(f0, 0);
    CHECK(cs.size() == 4);  // 2 disjuncts per copy, 2 copies
}

TEST_CASE("F0 reaches the expected frontier") {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    GoalFormula f0 =
        goal_formula("neg([X:real(-20,20),U:real(0,pinf)],(sq(X,Y:real(o(0),pinf)),add(X,U,-1))).", s);
    Frontier fr = e.to_frontier(f0);
    CHECK(fr.complete);
    REQUIRE(fr.forms.size() == 4);
    for (const auto& f : fr.forms)
        for (const auto& l : f.lits) CHECK(l.kind == Literal::Kind::Atom);

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
    CHECK(alpha_equal_frontier(fr, want));
}

TEST_CASE("chain counts, worklist versus naive") {
    const int n = 6;
    std::string atoms, locals;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) atoms += ",";
        atoms += "p(X" + std::to_string(i) + ",X" + std::to_string(i + 1) + ")";
        if (i > 1) locals += ",";
        locals += "X" + std::to_string(i);
    }
    std::string goal = "neg([" + locals + "],(" + atoms + ")).";
    std::string props = "eu(p(o([(1,top)]),i(top)),[1]).";

    for (bool naive : {false, true}) {
        Session s;
        PropertyStore st;
        for (auto& p : parse_properties(props)) st.declare(std::move(p));
        EngineOptions opt;
        opt.naive = naive;
        Engine e(s, st, opt);
        Frontier fr = e.to_frontier(goal_formula(goal, s));
        CHECK(fr.complete);
        CHECK(fr.forms.empty());  // proven false
        if (naive)
            CHECK(e.counts().tests_futile == n * (n - 1) / 2);
        else
            CHECK(e.counts().tests_total == 2 * n - 1);
    }
}

TEST_CASE("skip rule leaves a converged residual") {
    Session s;
    PropertyStore st;
    Engine e(s, st);
    Frontier fr = e.to_frontier(goal_formula("neg([Y],(r(X,Y))).", s));
    CHECK(fr.complete);
    REQUIRE(fr.forms.size() == 1);
    REQUIRE(fr.forms[0].lits.size() == 1);
    REQUIRE(fr.forms[0].lits[0].kind == Literal::Kind::Neg);
    CHECK(fr.forms[0].lits[0].neg.converged());
    CHECK(fr.forms[0].lits[0].neg.atoms.size() == 1);
    CHECK(e.counts().tests_futile == 1);
}

TEST_CASE("chan rule on a flat equation") {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    Frontier fr = e.to_frontier(goal_formula("neg([Y],(X = s(Y), p(Y))).", s));
    CHECK(fr.complete);
    REQUIRE(fr.forms.size() == 2);
    // not exists y'. x = s(y')
    REQUIRE(fr.forms[0].lits.size() == 1);
    REQUIRE(fr.forms[0].lits[0].kind == Literal::Kind::Neg);
    CHECK(fr.forms[0].lits[0].neg.converged());
    CHECK(fr.forms[0].lits[0].neg.atoms.begin()->second.eq_functor == "s");
    // x = s(y) and not p(y)
    REQUIRE(fr.forms[1].lits.size() == 2);
    CHECK(fr.forms[1].lits[0].atom.eq_functor == "s");
    CHECK(fr.forms[1].lits[1].kind == Literal::Kind::Neg);
    CHECK(fr.forms[1].lits[1].neg.atoms.begin()->second.pred == "p");
}

TEST_CASE("single flat equation stays residual") {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    Frontier fr = e.to_frontier(goal_formula("neg([Y],(X = s(Y))).", s));
    REQUIRE(fr.forms.size() == 1);
    REQUIRE(fr.forms[0].lits[0].kind == Literal::Kind::Neg);
    CHECK(fr.forms[0].lits[0].neg.converged());
}

TEST_CASE("session query one with the residual disequality") {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    Frontier fr = e.to_frontier(goal_formula(
        "neg([U,V],(sq(X:real(-0.5,0.5),U),sq(Y:real(-1,1),V),add(U,V,W:real(0,1)))).", s));
    CHECK(fr.complete);
    REQUIRE(fr.forms.size() == 1);
    const GoalFormula& f = fr.forms[0];
    REQUIRE(f.lits.size() == 4);
    int negeqs = 0;
    for (const auto& l : f.lits)
        if (l.kind == Literal::Kind::NegEq) {
            ++negeqs;
            CHECK(l.neg_eq.bound.empty());
            CHECK(l.neg_eq.a.size() == 1);
        }
    CHECK(negeqs == 1);

    Session t;
    GoalFormula want = pos_formula(
        "neg([],(sq(X:real(-0.5,0.5),U1:real),sq(Y:real(-1,1),V1:real),"
        "add(Z:real,V1,W:real(0,1)))).", t);
    NegEqLit ne;
    ne.a.push_back(Term::mkvar(t.id_of("Z")));
    ne.b.push_back(Term::mkvar(t.id_of("U1")));
    want.lits.push_back(Literal::mk_neg_eq(ne));
    CHECK(alpha_equal(f, want));
}

TEST_CASE("session query two") {
    Session s;
    PropertyStore st = seeded();
    for (auto& p : parse_properties(
             "eu(append(i(list(beta)),i(list(beta)),o([(1,list(beta))])),[1])."
             "eu(sort(i(list(gamma)),o([(1,list(gamma))])),[1])."))
        st.declare(std::move(p));
    Engine e(s, st);
    Frontier fr = e.to_frontier(goal_formula(
        "neg([W,Z],(append(X:list(real),Y:list(real),Z),sort(Z,W),b(W))).", s));
    REQUIRE(fr.forms.size() == 1);
    const GoalFormula& f = fr.forms[0];
    REQUIRE(f.lits.size() == 3);
    CHECK(f.lits[0].atom.pred == "append");
    CHECK(f.lits[1].atom.pred == "sort");
    REQUIRE(f.lits[2].kind == Literal::Kind::Neg);
    CHECK(f.lits[2].neg.atoms.begin()->second.pred == "b");
    CHECK(f.lits[2].neg.locals.empty());
}

TEST_CASE("naive and worklist frontiers agree") {
    for (const char* goal :
         {"neg([U,V],(sq(X:real(-0.5,0.5),U),sq(Y:real(-1,1),V),add(U,V,W:real(0,1)))).",
          "neg([X:real(-20,20),U:real(0,pinf)],(sq(X,Y:real(o(0),pinf)),add(X,U,-1)))."}) {
        Session s1, s2;
        PropertyStore st = seeded();
        EngineOptions naive;
        naive.naive = true;
        Engine e1(s1, st), e2(s2, st, naive);
        Frontier a = e1.to_frontier(goal_formula(goal, s1));
        Frontier b = e2.to_frontier(goal_formula(goal, s2));
        CHECK(alpha_equal_frontier(a, b));
    }
}

TEST_CASE("step limit marks the frontier incomplete") {
    Session s;
    PropertyStore st = seeded();
    EngineOptions opt;
    opt.max_steps = 1;
    Engine e(s, st, opt);
    Frontier fr = e.to_frontier(goal_formula(
        "neg([X:real(-20,20),U:real(0,pinf)],(sq(X,Y:real(o(0),pinf)),add(X,U,-1))).", s));
    CHECK_FALSE(fr.complete);
}

TEST_CASE("residual atoms are really inextractable") {
    Session s;
    PropertyStore st = seeded();
    Engine e(s, st);
    Frontier fr = e.to_frontier(goal_formula("neg([U,V],(r(U,V),t(V))).", s));
    for (const auto& f : fr.forms)
        for (const auto& l : f.lits) {
            if (l.kind != Literal::Kind::Neg) continue;
            for (const auto& [id, a] : l.neg.atoms)
                for (auto kind : {ExistenceProperty::Kind::Eu, ExistenceProperty::Kind::Es})
                    for (const ExistenceProperty* p : st.lookup(a.pred, a.arity(), {kind}))
                        CHECK_FALSE(sqvt(s, *p, a, l.neg.locals, f.env).has_value());
        }
    CHECK(s.counters().theorem_violations == 0);
}
