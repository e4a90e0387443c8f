#ifndef NEGSIMP_TERM_HPP
#define NEGSIMP_TERM_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "negsimp/types.hpp"

namespace negsimp {

struct GoalError : std::runtime_error {
    explicit GoalError(const std::string& msg) : std::runtime_error(msg) {}
};

using VarId = int;

struct Term {
    enum class Kind { Var, Num, Compound };
    Kind kind = Kind::Var;
    VarId var = -1;
    bool num_int = true;  // Num: integer vs real literal
    double num = 0.0;
    std::string functor;  // Compound; lists use "." / "[]"
    std::vector<Term> args;

    static Term mkvar(VarId id) { Term t; t.var = id; return t; }
    static Term int_const(long long v);
    static Term real_const(double v);
    static Term compound(std::string f, std::vector<Term> args);
    static Term nil();
    static Term cons(Term head, Term tail);

    bool is_var() const { return kind == Kind::Var; }
    bool operator==(const Term& o) const;
    bool operator!=(const Term& o) const { return !(*this == o); }
};

// An atom p(t1..tn). When `eq_functor` is nonempty the atom encodes the
// flat equation  args[0] = eq_functor(args[1..])  with a synthetic
// predicate symbol, so existence properties apply position-wise.
struct Atom {
    std::string pred;
    std::vector<Term> args;
    std::string eq_functor;

    int arity() const { return (int)args.size(); }
    bool operator==(const Atom& o) const {
        return pred == o.pred && eq_functor == o.eq_functor && args == o.args;
    }
};

// Partial map from argument positions (1-based) to terms.
using ArgVector = std::map<int, Term>;

ArgVector project(const ArgVector& v, const std::set<int>& positions);
ArgVector juxtapose(const ArgVector& a, const ArgVector& b);
bool all_diff(const ArgVector& v);

using Substitution = std::map<VarId, Term>;

Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);
ArgVector apply(const Substitution& s, const ArgVector& v);

void collect_vars(const Term& t, std::set<VarId>& out);
std::set<VarId> vars(const Term& t);
std::set<VarId> vars(const Atom& a);
std::set<VarId> vars(const ArgVector& v);
std::set<VarId> vars(const std::vector<Atom>& conj);

// Per-formula typing of variables; branches of the derivation restrict
// types independently, so each goal formula carries its own copy.
struct TypeEnv {
    std::map<VarId, NormalType> ty;

    const NormalType& type_of_var(VarId v) const;
    void set(VarId v, NormalType t) { ty[v] = std::move(t); }
    bool has(VarId v) const { return ty.count(v) != 0; }
};

// Type of a term: variables from the environment, numeric constants as
// singleton intervals, list terms as list(join of element types).
// Non-list compounds are Untypeable.
NormalType type_of(const Term& t, const TypeEnv& env);

// As above but approximates untypeable compounds by top (an upper bound
// is all the extractability test needs).
NormalType type_of_or_top(const Term& t, const TypeEnv& env);

bool is_list_term(const Term& t);

// Engine-wide state: fresh-variable issuance, printable names, and the
// instrumentation counters behind test_count_probe.
class Session {
  public:
    struct Counters {
        long long sqvt_calls = 0;
        long long sqvt_failures = 0;
        long long slot_visits = 0;
        long long last_call_slot_visits = 0;
        long long theorem_violations = 0;
    };

    // Fresh variable with a printable name derived from `base`; the name
    // is uniquified against every name issued so far.
    VarId fresh(const std::string& base);
    VarId intern(const std::string& name);  // parser-visible variables

    const std::string& name_of(VarId v) const;
    bool known_name(const std::string& name) const { return by_name_.count(name) != 0; }
    VarId id_of(const std::string& name) const { return by_name_.at(name); }

    Counters& counters() { return counters_; }
    const Counters& counters() const { return counters_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, VarId> by_name_;
    std::map<std::string, int> suffix_;
    Counters counters_;
};

}  // namespace negsimp

#endif
