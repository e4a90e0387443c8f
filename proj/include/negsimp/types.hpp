#ifndef NEGSIMP_TYPES_HPP
#define NEGSIMP_TYPES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negsimp {

struct TypeError : std::runtime_error {
    explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A bound of a numeric interval. NegInf/PosInf are always open.
struct Bound {
    enum Kind { NegInf, Finite, PosInf };
    Kind kind = Finite;
    double value = 0.0;
    bool open = false;

    static Bound neg_inf() { return {NegInf, 0.0, true}; }
    static Bound pos_inf() { return {PosInf, 0.0, true}; }
    static Bound closed(double v) { return {Finite, v, false}; }
    static Bound open_at(double v) { return {Finite, v, true}; }
};

// Surface type syntax. `Not` may only appear as the right operand of an
// `And` whose left side is negation-free (difference form); normalize()
// rejects anything else.
struct TypeExpr {
    enum class Kind { Top, Bot, Interval, List, And, Not, Param };
    Kind kind = Kind::Top;
    bool int_base = false;      // Interval: int vs real
    Bound lo, hi;               // Interval
    std::string param;          // Param
    std::vector<TypeExpr> sub;  // List:1, And:2, Not:1

    static TypeExpr top() { return TypeExpr{}; }
    static TypeExpr bot() { TypeExpr t; t.kind = Kind::Bot; return t; }
    static TypeExpr interval(bool int_base, Bound lo, Bound hi);
    static TypeExpr list(TypeExpr elem);
    static TypeExpr conj(TypeExpr a, TypeExpr b);
    static TypeExpr neg(TypeExpr a);
    static TypeExpr parameter(std::string name);
};

// Closed integer interval; lo_inf/hi_inf mark unbounded ends.
struct IntIv {
    bool lo_inf = false, hi_inf = false;
    long long lo = 0, hi = 0;
};

struct RealIv {
    Bound lo, hi;
};

// Canonical type: sorted, disjoint, non-mergeable interval runs over a
// numeric base, or one of the structural bases.
struct NormalType {
    enum class Base { Bot, Top, Int, Real, List, Param };
    Base base = Base::Top;
    std::vector<IntIv> int_ivs;
    std::vector<RealIv> real_ivs;
    std::string param;
    std::shared_ptr<NormalType> elem;  // List

    static NormalType bot() { NormalType t; t.base = Base::Bot; return t; }
    static NormalType top() { NormalType t; t.base = Base::Top; return t; }
    static NormalType ints(std::vector<IntIv> ivs);
    static NormalType reals(std::vector<RealIv> ivs);
    static NormalType list(NormalType e);
    static NormalType parameter(std::string name);

    // Whole-base conveniences.
    static NormalType all_int();
    static NormalType all_real();
    static NormalType int_range(long long lo, long long hi);
    static NormalType real_range(Bound lo, Bound hi);
};

NormalType normalize(const TypeExpr& t);

bool subtype(const NormalType& a, const NormalType& b);
NormalType intersect(const NormalType& a, const NormalType& b);
bool is_empty(const NormalType& a);
bool equiv(const NormalType& a, const NormalType& b);

// a minus b, when the result is expressible in the lattice.
std::optional<NormalType> difference(const NormalType& a, const NormalType& b);

// Least upper bound good enough for typing list elements: exact for
// same-base numeric types, otherwise widens (int joins real into real,
// unrelated bases join to top).
NormalType type_join(const NormalType& a, const NormalType& b);

bool struct_equal(const NormalType& a, const NormalType& b);

// Pointwise liftings over position-indexed type vectors.
using TypeVector = std::map<int, NormalType>;
bool vec_subtype(const TypeVector& a, const TypeVector& b);
bool vec_intersects(const TypeVector& a, const TypeVector& b);

// Ground values, shared with the finite-domain oracle. Integer and real
// constants are distinct sorts; the integers embed into real types.
struct GroundValue {
    enum class Kind { Int, Real, List, Compound };
    Kind kind = Kind::Int;
    long long i = 0;
    double r = 0.0;
    std::string functor;
    std::vector<GroundValue> items;  // List elements or Compound args

    static GroundValue of_int(long long v) { GroundValue g; g.i = v; return g; }
    static GroundValue of_real(double v) { GroundValue g; g.kind = Kind::Real; g.r = v; return g; }
    static GroundValue of_list(std::vector<GroundValue> xs);
    static GroundValue compound(std::string f, std::vector<GroundValue> xs);

    bool operator==(const GroundValue& o) const;
    bool operator<(const GroundValue& o) const;
    // Numeric value regardless of sort; throws for lists/compounds.
    double num() const;
    bool is_numeric() const { return kind == Kind::Int || kind == Kind::Real; }
};

bool member(const GroundValue& v, const NormalType& t);

// Structural match of `actual` against a possibly-parameterized
// `pattern`, binding type parameters on first occurrence. Returns false
// when the match fails; bindings may be partially extended on failure.
bool match_type(const NormalType& actual, const NormalType& pattern,
                std::map<std::string, NormalType>& bindings);

// Substitutes bound parameters in `pattern`; unbound parameters survive.
NormalType instantiate(const NormalType& pattern,
                       const std::map<std::string, NormalType>& bindings);

std::string to_string(const NormalType& t);
std::string to_string(const TypeExpr& t);
std::string to_string(const GroundValue& v);

}  // namespace negsimp

#endif
