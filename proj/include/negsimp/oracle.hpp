#ifndef NEGSIMP_ORACLE_HPP
#define NEGSIMP_ORACLE_HPP

#include "negsimp/engine.hpp"
#include "negsimp/property.hpp"

namespace negsimp {

struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Finite universe of ground values plus predicate semantics, either an
// explicit extension or one of the arithmetic builtins.
struct FiniteModel {
    std::vector<GroundValue> universe;
    std::map<std::pair<std::string, int>, std::set<std::vector<GroundValue>>> extensions;
    std::map<std::string, std::string> builtins;  // pred -> sq|add|lt|geq

    void add_value(const GroundValue& v);
    std::vector<GroundValue> carrier(const NormalType& t) const;
    bool atom_true(const std::string& pred, const std::string& eq_functor,
                   const std::vector<GroundValue>& args) const;
};

using Assignment = std::map<VarId, GroundValue>;

// Standard first-order evaluation; bound variables range over the
// universe restricted to their type.
bool eval(const GoalFormula& f, const Assignment& asg, const FiniteModel& m);

struct Verdict {
    enum class Status { Pass, Boundary, Violation };
    Status status = Status::Pass;
    std::string witness;

    bool pass() const { return status == Status::Pass; }
};

// Does the disjunction of `after` agree with `before` on every
// assignment of the shared globals? Extra after-side variables are
// existentially quantified.
Verdict check_equivalence(const GoalFormula& before, const std::vector<GoalFormula>& after,
                          const FiniteModel& m, const Session& s);

// Audits a declared property against the model: completeness plus the
// exactly-one / at-most-one / at-least-one count per output subtype.
// Absent outputs of a computable builtin are reported as Boundary
// (model truncation) rather than Violation.
Verdict audit_property(const ExistenceProperty& p, const FiniteModel& m);

}  // namespace negsimp

#endif
