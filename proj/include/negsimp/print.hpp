#ifndef NEGSIMP_PRINT_HPP
#define NEGSIMP_PRINT_HPP

#include <string>

#include "negsimp/engine.hpp"

namespace negsimp {

// Terms print with a type annotation on every variable whose type is
// not top; `extra` supplies types of bound variables shadowing the
// environment.
std::string term_str(const Term& t, const Session& s, const TypeEnv& env,
                     const std::map<VarId, NormalType>* extra = nullptr);
std::string atom_str(const Atom& a, const Session& s, const TypeEnv& env,
                     const std::map<VarId, NormalType>* extra = nullptr);
std::string literal_str(const Literal& l, const Session& s, const TypeEnv& env);
std::string formula_str(const GoalFormula& f, const Session& s);

// Frontier stanzas separated by ';' and closed with the session's
// final line.
std::string frontier_text(const Frontier& fr, const Session& s);
// One JSON record per conjunct, for tooling.
std::string frontier_json(const Frontier& fr, const Session& s);

}  // namespace negsimp

#endif
