#ifndef NEGSIMP_ALPHA_HPP
#define NEGSIMP_ALPHA_HPP

#include "negsimp/engine.hpp"

namespace negsimp {

// Literal-multiset equality up to a variable bijection; variable types
// must be equivalent under the bijection. Bound variables are compared
// with the types recorded at their binder.
bool alpha_equal(const GoalFormula& a, const GoalFormula& b);

// Frontier equality as a multiset of alpha-equal conjunctions.
bool alpha_equal_frontier(const Frontier& a, const Frontier& b);

}  // namespace negsimp

#endif
