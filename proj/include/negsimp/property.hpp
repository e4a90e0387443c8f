#ifndef NEGSIMP_PROPERTY_HPP
#define NEGSIMP_PROPERTY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "negsimp/term.hpp"
#include "negsimp/types.hpp"

namespace negsimp {

struct PropertyError : std::runtime_error {
    explicit PropertyError(const std::string& msg) : std::runtime_error(msg) {}
};

// A typed existence property of a predicate: for eu/es, interleaved
// input slots i(sigma) and output slots o(Theta-bar) indexed by I; for
// exists, output slots carry one type; for misc, the replacement
// template  not p(u) <=> q(u).
struct ExistenceProperty {
    enum class Kind { Eu, Es, Exists, Misc };

    struct Slot {
        bool input = true;
        NormalType in_ty;
        std::map<int, NormalType> out_tys;  // eu/es: index -> output subtype
        NormalType exists_ty;               // exists
    };

    Kind kind = Kind::Eu;
    std::string pred;
    int arity = 0;
    std::vector<Slot> slots;       // positions 1..arity in order
    std::vector<int> indices;      // I, ascending (eu/es)

    // misc: lhs is p(v1..vn) with distinct typed variables, rhs the
    // replacement goal over the same variables.
    Atom misc_lhs, misc_rhs;
    TypeEnv misc_env;

    bool has_outputs() const;
};

// Append-only store of declared properties, looked up by predicate and
// kind in declaration order.
class PropertyStore {
  public:
    void declare(ExistenceProperty p);
    std::vector<const ExistenceProperty*> lookup(const std::string& pred, int arity,
                                                 const std::set<ExistenceProperty::Kind>& kinds) const;
    // Count of stored properties for a predicate/arity (the bound used
    // by the linearity analysis).
    int count_for(const std::string& pred, int arity) const;

    // Chan-style es/eu properties for the flat equation x = f(y1..yn),
    // synthesized per functor arity on first use.
    const std::vector<ExistenceProperty>& chan_family(int eq_arity) const;

  private:
    void validate(const ExistenceProperty& p) const;
    std::vector<ExistenceProperty> props_;
    mutable std::map<int, std::vector<ExistenceProperty>> chan_cache_;
};

// Built-in properties of arithmetic constraints: add/3 exists-unique in
// each argument direction over the reals, sq/2 forward and backward
// exists-unique, sq/2 exists-sometimes over the positive integers, and
// the not-lt/geq replacement.
void seed_builtins(PropertyStore& store);

}  // namespace negsimp

#endif
