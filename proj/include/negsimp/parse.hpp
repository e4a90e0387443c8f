#ifndef NEGSIMP_PARSE_HPP
#define NEGSIMP_PARSE_HPP

#include "negsimp/engine.hpp"
#include "negsimp/oracle.hpp"
#include "negsimp/property.hpp"

namespace negsimp {

struct SyntaxError : std::runtime_error {
    int line, col;
    SyntaxError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
};

NormalType parse_type_text(const std::string& text);

// A goal file  neg([locals],(conj)).  Variables are capitalized; the
// first occurrence of a variable may carry :type. Untyped bound
// variables default to top; global types land in env.
struct ParsedGoal {
    std::vector<Atom> conj;
    std::map<VarId, NormalType> locals;
    TypeEnv env;
};

ParsedGoal parse_goal(const std::string& text, Session& s);

std::vector<ExistenceProperty> parse_properties(const std::string& text);

FiniteModel parse_model(const std::string& text);

}  // namespace negsimp

#endif
