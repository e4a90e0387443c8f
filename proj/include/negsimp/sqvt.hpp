#ifndef NEGSIMP_SQVT_HPP
#define NEGSIMP_SQVT_HPP

#include <optional>

#include "negsimp/property.hpp"
#include "negsimp/term.hpp"

namespace negsimp {

// Result of a successful extractability test. Output positions are
// split into r_bar (kept local variables) and s_tilde (arguments that
// got a fresh local in z_bar); x_copies holds one typed fresh copy of
// xbar per relevant index.
struct SqvtResult {
    Atom g_prime;
    ArgVector xbar;
    std::vector<ArgVector> x_copies;  // parallel to J
    std::vector<int> J;               // ascending
    ArgVector s_tilde;
    ArgVector z_bar;  // dom(z_bar) = dom(s_tilde)
    ArgVector r_bar;
    std::vector<VarId> w_bar;  // discovery order
    // Types of every variable created by this call (fresh locals are
    // top, copies carry the output subtype of their index).
    std::map<VarId, NormalType> new_var_types;
    // Instantiated output subtype vector per relevant index.
    std::map<int, TypeVector> copy_types;
};

// The extractability test. `locals` supplies the types of the bound
// variables, `env` those of the globals. Returns nothing when the atom
// cannot be made to satisfy the property.
std::optional<SqvtResult> sqvt(Session& session, const ExistenceProperty& p, const Atom& g,
                               const std::map<VarId, NormalType>& locals, const TypeEnv& env);

}  // namespace negsimp

#endif
