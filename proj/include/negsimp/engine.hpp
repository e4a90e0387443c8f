#ifndef NEGSIMP_ENGINE_HPP
#define NEGSIMP_ENGINE_HPP

#include <deque>
#include <string>
#include <vector>

#include "negsimp/property.hpp"
#include "negsimp/sqvt.hpp"
#include "negsimp/term.hpp"

namespace negsimp {

struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// A negation under simplification: the remaining conjunction keyed by
// stable node ids, the typed bound variables, and the checklist of
// atoms whose extractability is still to be tested. Digraph edges are
// implicit: atom node A is linked to local node v iff v occurs in A.
struct NegGoal {
    std::map<int, Atom> atoms;
    std::map<VarId, NormalType> locals;
    std::deque<int> checklist;
    bool done = false;

    bool converged() const { return done; }
};

NegGoal init_neg(const std::vector<Atom>& conj, const std::map<VarId, NormalType>& locals);

// Adjacency query: is atom node `id` linked to some variable in vs?
bool digraph_link(const NegGoal& g, int id, const std::set<VarId>& vs);
// Removes atom nodes and local-variable nodes with incident edges.
void digraph_delete(NegGoal& g, const std::set<int>& atom_ids, const std::set<VarId>& vs);

// Residual typed disequality  not exists bound.(a = b)  with the
// equations paired positionwise.
struct NegEqLit {
    std::vector<std::pair<VarId, NormalType>> bound;
    std::vector<Term> a, b;
};

struct Literal {
    enum class Kind { Atom, Neg, NegEq, False };
    Kind kind = Kind::Atom;
    Atom atom;
    NegGoal neg;
    NegEqLit neg_eq;

    static Literal mk_atom(Atom a);
    static Literal mk_neg(NegGoal g);
    static Literal mk_neg_eq(NegEqLit e);
    static Literal mk_false();
};

// A conjunction of literals with its own typing of variables; derived
// type restrictions are folded into the environment.
struct GoalFormula {
    std::vector<Literal> lits;
    TypeEnv env;
};

struct Frontier {
    std::vector<GoalFormula> forms;
    bool complete = true;
    long long steps = 0;
};

struct EngineOptions {
    bool naive = false;
    long long max_steps = 100000;
    bool trace = false;
};

class Engine {
  public:
    struct Counts {
        long long tests_total = 0;   // extractability tests on atoms
        long long tests_futile = 0;  // tests where no property applied
    };

    Engine(Session& session, const PropertyStore& store, EngineOptions opt = {});

    // One derivation step on the NegGoal literal at lit_index. Children
    // falsified during construction are pruned, so the result may be
    // empty (the parent conjunction is unsatisfiable).
    std::vector<GoalFormula> step(const GoalFormula& ctx, size_t lit_index);

    // Breadth-first expansion until every negation is converged or the
    // step limit is hit (frontier flagged incomplete).
    Frontier to_frontier(GoalFormula g0);

    const Counts& counts() const { return counts_; }
    const std::vector<std::string>& trace() const { return trace_; }
    Session& session() { return session_; }

  private:
    bool try_et(const GoalFormula& ctx, const NegGoal& g) const;
    bool try_rt(const GoalFormula& ctx, const NegGoal& g, Atom& replacement) const;
    std::vector<GoalFormula> build_children(const GoalFormula& ctx, size_t li, int head_id,
                                            const SqvtResult& r, bool es);

    Session& session_;
    const PropertyStore& store_;
    EngineOptions opt_;
    Counts counts_;
    std::vector<std::string> trace_;
};

// Collected free (global) variables of a formula's literals.
std::set<VarId> global_vars(const GoalFormula& f);

}  // namespace negsimp

#endif
