#include "negsimp/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace negsimp {

// ---------------------------------------------------------------------------
// TypeExpr constructors

TypeExpr TypeExpr::interval(bool int_base, Bound lo, Bound hi) {
    TypeExpr t;
    t.kind = Kind::Interval;
    t.int_base = int_base;
    t.lo = lo;
    t.hi = hi;
    return t;
}

TypeExpr TypeExpr::list(TypeExpr elem) {
    TypeExpr t;
    t.kind = Kind::List;
    t.sub.push_back(std::move(elem));
    return t;
}

TypeExpr TypeExpr::conj(TypeExpr a, TypeExpr b) {
    TypeExpr t;
    t.kind = Kind::And;
    t.sub.push_back(std::move(a));
    t.sub.push_back(std::move(b));
    return t;
}

TypeExpr TypeExpr::neg(TypeExpr a) {
    TypeExpr t;
    t.kind = Kind::Not;
    t.sub.push_back(std::move(a));
    return t;
}

TypeExpr TypeExpr::parameter(std::string name) {
    TypeExpr t;
    t.kind = Kind::Param;
    t.param = std::move(name);
    return t;
}

// ---------------------------------------------------------------------------
// Bound ordering helpers

// Compares two bounds used as *lower* bounds: smaller covers more.
static int cmp_lower(const Bound& a, const Bound& b) {
    if (a.kind == Bound::NegInf) return b.kind == Bound::NegInf ? 0 : -1;
    if (b.kind == Bound::NegInf) return 1;
    if (a.kind == Bound::PosInf) return b.kind == Bound::PosInf ? 0 : 1;
    if (b.kind == Bound::PosInf) return -1;
    if (a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.open == b.open) return 0;
    return a.open ? 1 : -1;  // closed lower bound starts earlier
}

// Compares two bounds used as *upper* bounds: larger covers more.
static int cmp_upper(const Bound& a, const Bound& b) {
    if (a.kind == Bound::PosInf) return b.kind == Bound::PosInf ? 0 : 1;
    if (b.kind == Bound::PosInf) return -1;
    if (a.kind == Bound::NegInf) return b.kind == Bound::NegInf ? 0 : -1;
    if (b.kind == Bound::NegInf) return 1;
    if (a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.open == b.open) return 0;
    return a.open ? -1 : 1;  // open upper bound ends earlier
}

static bool real_iv_empty(const RealIv& iv) {
    if (iv.lo.kind == Bound::PosInf || iv.hi.kind == Bound::NegInf) return true;
    if (iv.lo.kind != Bound::Finite || iv.hi.kind != Bound::Finite) return false;
    if (iv.lo.value > iv.hi.value) return true;
    if (iv.lo.value == iv.hi.value) return iv.lo.open || iv.hi.open;
    return false;
}

static bool in_real_iv(double x, const RealIv& iv) {
    if (iv.lo.kind == Bound::Finite) {
        if (x < iv.lo.value || (iv.lo.open && x == iv.lo.value)) return false;
    } else if (iv.lo.kind == Bound::PosInf) {
        return false;
    }
    if (iv.hi.kind == Bound::Finite) {
        if (x > iv.hi.value || (iv.hi.open && x == iv.hi.value)) return false;
    } else if (iv.hi.kind == Bound::NegInf) {
        return false;
    }
    return true;
}

// True when iv a and iv b overlap or touch so their union is an interval.
static bool reals_mergeable(const RealIv& a, const RealIv& b) {
    // assumes a.lo <= b.lo
    if (a.hi.kind == Bound::PosInf) return true;
    if (b.lo.kind == Bound::NegInf) return true;
    if (a.hi.kind != Bound::Finite || b.lo.kind != Bound::Finite) return false;
    if (a.hi.value > b.lo.value) return true;
    if (a.hi.value < b.lo.value) return false;
    return !(a.hi.open && b.lo.open);
}

static std::vector<RealIv> canon_reals(std::vector<RealIv> ivs) {
    ivs.erase(std::remove_if(ivs.begin(), ivs.end(), real_iv_empty), ivs.end());
    std::sort(ivs.begin(), ivs.end(), [](const RealIv& a, const RealIv& b) {
        int c = cmp_lower(a.lo, b.lo);
        if (c != 0) return c < 0;
        return cmp_upper(a.hi, b.hi) < 0;
    });
    std::vector<RealIv> out;
    for (const auto& iv : ivs) {
        if (!out.empty() && reals_mergeable(out.back(), iv)) {
            if (cmp_upper(iv.hi, out.back().hi) > 0) out.back().hi = iv.hi;
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

static bool int_iv_empty(const IntIv& iv) {
    if (iv.lo_inf || iv.hi_inf) return false;
    return iv.lo > iv.hi;
}

static bool ints_mergeable(const IntIv& a, const IntIv& b) {
    // assumes a.lo <= b.lo
    if (a.hi_inf || b.lo_inf) return true;
    return b.lo <= a.hi + 1;
}

static std::vector<IntIv> canon_ints(std::vector<IntIv> ivs) {
    ivs.erase(std::remove_if(ivs.begin(), ivs.end(), int_iv_empty), ivs.end());
    auto lo_key = [](const IntIv& iv) {
        return iv.lo_inf ? std::pair<int, long long>{0, 0} : std::pair<int, long long>{1, iv.lo};
    };
    std::sort(ivs.begin(), ivs.end(), [&](const IntIv& a, const IntIv& b) { return lo_key(a) < lo_key(b); });
    std::vector<IntIv> out;
    for (const auto& iv : ivs) {
        if (!out.empty() && ints_mergeable(out.back(), iv)) {
            IntIv& last = out.back();
            if (iv.hi_inf) {
                last.hi_inf = true;
            } else if (!last.hi_inf && iv.hi > last.hi) {
                last.hi = iv.hi;
            }
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// NormalType constructors

NormalType NormalType::ints(std::vector<IntIv> ivs) {
    auto c = canon_ints(std::move(ivs));
    if (c.empty()) return bot();
    NormalType t;
    t.base = Base::Int;
    t.int_ivs = std::move(c);
    return t;
}

NormalType NormalType::reals(std::vector<RealIv> ivs) {
    auto c = canon_reals(std::move(ivs));
    if (c.empty()) return bot();
    NormalType t;
    t.base = Base::Real;
    t.real_ivs = std::move(c);
    return t;
}

NormalType NormalType::list(NormalType e) {
    NormalType t;
    t.base = Base::List;
    t.elem = std::make_shared<NormalType>(std::move(e));
    return t;
}

NormalType NormalType::parameter(std::string name) {
    NormalType t;
    t.base = Base::Param;
    t.param = std::move(name);
    return t;
}

NormalType NormalType::all_int() {
    return ints({IntIv{true, true, 0, 0}});
}

NormalType NormalType::all_real() {
    return reals({RealIv{Bound::neg_inf(), Bound::pos_inf()}});
}

NormalType NormalType::int_range(long long lo, long long hi) {
    return ints({IntIv{false, false, lo, hi}});
}

NormalType NormalType::real_range(Bound lo, Bound hi) {
    return reals({RealIv{lo, hi}});
}

// ---------------------------------------------------------------------------
// normalize

static IntIv int_iv_from_bounds(const Bound& lo, const Bound& hi) {
    IntIv iv;
    if (lo.kind == Bound::NegInf) {
        iv.lo_inf = true;
    } else if (lo.kind == Bound::PosInf) {
        return IntIv{false, false, 1, 0};  // empty
    } else {
        double v = lo.value;
        double c = std::ceil(v);
        iv.lo = (long long)c;
        if (lo.open && c == v) iv.lo += 1;
    }
    if (hi.kind == Bound::PosInf) {
        iv.hi_inf = true;
    } else if (hi.kind == Bound::NegInf) {
        return IntIv{false, false, 1, 0};
    } else {
        double v = hi.value;
        double f = std::floor(v);
        iv.hi = (long long)f;
        if (hi.open && f == v) iv.hi -= 1;
    }
    return iv;
}

static NormalType normalize_positive(const TypeExpr& t);

// a \ b or throws when not expressible.
static NormalType difference_or_throw(const NormalType& a, const NormalType& b) {
    auto d = difference(a, b);
    if (!d) throw TypeError("type difference not expressible: " + to_string(a) + " minus " + to_string(b));
    return *d;
}

static NormalType normalize_and(const TypeExpr& t) {
    const TypeExpr& lhs = t.sub[0];
    const TypeExpr& rhs = t.sub[1];
    if (rhs.kind == TypeExpr::Kind::Not) {
        NormalType l = (lhs.kind == TypeExpr::Kind::And) ? normalize_and(lhs) : normalize_positive(lhs);
        NormalType r = normalize_positive(rhs.sub[0]);
        return difference_or_throw(l, r);
    }
    if (lhs.kind == TypeExpr::Kind::Not) throw TypeError("not(...) may only appear on the right of `and`");
    NormalType l = (lhs.kind == TypeExpr::Kind::And) ? normalize_and(lhs) : normalize_positive(lhs);
    return intersect(l, normalize_positive(rhs));
}

static NormalType normalize_positive(const TypeExpr& t) {
    switch (t.kind) {
        case TypeExpr::Kind::Top: return NormalType::top();
        case TypeExpr::Kind::Bot: return NormalType::bot();
        case TypeExpr::Kind::Param: return NormalType::parameter(t.param);
        case TypeExpr::Kind::List: return NormalType::list(normalize_positive(t.sub[0]));
        case TypeExpr::Kind::Interval:
            if (t.int_base) return NormalType::ints({int_iv_from_bounds(t.lo, t.hi)});
            return NormalType::reals({RealIv{t.lo, t.hi}});
        case TypeExpr::Kind::And: return normalize_and(t);
        case TypeExpr::Kind::Not: throw TypeError("not(...) may only appear on the right of `and`");
    }
    throw TypeError("malformed type expression");
}

NormalType normalize(const TypeExpr& t) {
    return normalize_positive(t);
}

// ---------------------------------------------------------------------------
// Interval set algebra

static std::vector<RealIv> real_complement(const std::vector<RealIv>& ivs) {
    std::vector<RealIv> out;
    Bound lo = Bound::neg_inf();
    for (const auto& iv : ivs) {
        if (iv.lo.kind == Bound::Finite) {
            Bound hi = iv.lo;
            hi.open = !hi.open;
            out.push_back(RealIv{lo, hi});
        } else if (iv.lo.kind == Bound::PosInf) {
            continue;
        }
        // next complement piece starts past this interval's upper end
        if (iv.hi.kind == Bound::PosInf) return out;
        lo = iv.hi;
        lo.open = !lo.open;
    }
    out.push_back(RealIv{lo, Bound::pos_inf()});
    return out;
}

static std::vector<RealIv> real_intersect(const std::vector<RealIv>& a, const std::vector<RealIv>& b) {
    std::vector<RealIv> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            RealIv iv;
            iv.lo = cmp_lower(x.lo, y.lo) >= 0 ? x.lo : y.lo;
            iv.hi = cmp_upper(x.hi, y.hi) <= 0 ? x.hi : y.hi;
            if (!real_iv_empty(iv)) out.push_back(iv);
        }
    return canon_reals(out);
}

static std::vector<IntIv> int_intersect(const std::vector<IntIv>& a, const std::vector<IntIv>& b) {
    std::vector<IntIv> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            IntIv iv;
            iv.lo_inf = x.lo_inf && y.lo_inf;
            iv.hi_inf = x.hi_inf && y.hi_inf;
            if (!iv.lo_inf) iv.lo = x.lo_inf ? y.lo : (y.lo_inf ? x.lo : std::max(x.lo, y.lo));
            if (!iv.hi_inf) iv.hi = x.hi_inf ? y.hi : (y.hi_inf ? x.hi : std::min(x.hi, y.hi));
            if (!int_iv_empty(iv)) out.push_back(iv);
        }
    return canon_ints(out);
}

static std::vector<IntIv> int_complement(const std::vector<IntIv>& ivs) {
    std::vector<IntIv> out;
    bool open_lo = true;  // current complement piece extends to -inf
    long long lo = 0;
    for (const auto& iv : ivs) {
        if (!iv.lo_inf) {
            IntIv piece;
            piece.lo_inf = open_lo;
            piece.lo = lo;
            piece.hi = iv.lo - 1;
            if (open_lo || piece.lo <= piece.hi) out.push_back(piece);
        }
        if (iv.hi_inf) return out;
        open_lo = false;
        lo = iv.hi + 1;
    }
    IntIv tail;
    tail.lo_inf = open_lo;
    tail.lo = lo;
    tail.hi_inf = true;
    out.push_back(tail);
    return out;
}

// Integers contained in a real interval, as an int interval (may be empty).
static IntIv round_to_int(const RealIv& iv) {
    return int_iv_from_bounds(iv.lo, iv.hi);
}

static std::vector<IntIv> round_to_ints(const std::vector<RealIv>& ivs) {
    std::vector<IntIv> out;
    for (const auto& iv : ivs) out.push_back(round_to_int(iv));
    return canon_ints(out);
}

// ---------------------------------------------------------------------------
// subtype / intersect / equiv

bool is_empty(const NormalType& a) {
    return a.base == NormalType::Base::Bot;
}

bool subtype(const NormalType& a, const NormalType& b) {
    using B = NormalType::Base;
    if (a.base == B::Bot) return true;
    if (b.base == B::Top) return true;
    if (a.base == B::Top) return false;
    if (b.base == B::Bot) return false;
    if (a.base == B::Param || b.base == B::Param)
        return a.base == B::Param && b.base == B::Param && a.param == b.param;
    if (a.base == B::List && b.base == B::List) return subtype(*a.elem, *b.elem);
    if (a.base == B::Int && b.base == B::Int)
        return int_intersect(a.int_ivs, int_complement(b.int_ivs)).empty();
    if (a.base == B::Int && b.base == B::Real)
        return int_intersect(a.int_ivs, round_to_ints(real_complement(b.real_ivs))).empty();
    if (a.base == B::Real && b.base == B::Real)
        return real_intersect(a.real_ivs, real_complement(b.real_ivs)).empty();
    return false;
}

NormalType intersect(const NormalType& a, const NormalType& b) {
    using B = NormalType::Base;
    if (a.base == B::Bot || b.base == B::Bot) return NormalType::bot();
    if (a.base == B::Top) return b;
    if (b.base == B::Top) return a;
    if (a.base == B::Param && b.base == B::Param) {
        if (a.param != b.param)
            throw TypeError("cannot intersect distinct type parameters " + a.param + " and " + b.param);
        return a;
    }
    if (a.base == B::Param) return b;
    if (b.base == B::Param) return a;
    if (a.base == B::List && b.base == B::List) return NormalType::list(intersect(*a.elem, *b.elem));
    if (a.base == B::Int && b.base == B::Int) return NormalType::ints(int_intersect(a.int_ivs, b.int_ivs));
    if (a.base == B::Real && b.base == B::Real) return NormalType::reals(real_intersect(a.real_ivs, b.real_ivs));
    if (a.base == B::Int && b.base == B::Real)
        return NormalType::ints(int_intersect(a.int_ivs, round_to_ints(b.real_ivs)));
    if (a.base == B::Real && b.base == B::Int)
        return NormalType::ints(int_intersect(b.int_ivs, round_to_ints(a.real_ivs)));
    return NormalType::bot();
}

bool struct_equal(const NormalType& a, const NormalType& b) {
    using B = NormalType::Base;
    if (a.base != b.base) return false;
    switch (a.base) {
        case B::Bot:
        case B::Top: return true;
        case B::Param: return a.param == b.param;
        case B::List: return struct_equal(*a.elem, *b.elem);
        case B::Int:
            if (a.int_ivs.size() != b.int_ivs.size()) return false;
            for (size_t i = 0; i < a.int_ivs.size(); ++i) {
                const auto& x = a.int_ivs[i];
                const auto& y = b.int_ivs[i];
                if (x.lo_inf != y.lo_inf || x.hi_inf != y.hi_inf) return false;
                if (!x.lo_inf && x.lo != y.lo) return false;
                if (!x.hi_inf && x.hi != y.hi) return false;
            }
            return true;
        case B::Real:
            if (a.real_ivs.size() != b.real_ivs.size()) return false;
            for (size_t i = 0; i < a.real_ivs.size(); ++i) {
                if (cmp_lower(a.real_ivs[i].lo, b.real_ivs[i].lo) != 0) return false;
                if (cmp_upper(a.real_ivs[i].hi, b.real_ivs[i].hi) != 0) return false;
            }
            return true;
    }
    return false;
}

bool equiv(const NormalType& a, const NormalType& b) {
    return struct_equal(a, b);
}

std::optional<NormalType> difference(const NormalType& a, const NormalType& b) {
    using B = NormalType::Base;
    if (a.base == B::Bot) return NormalType::bot();
    if (b.base == B::Bot) return a;
    if (b.base == B::Top) return NormalType::bot();
    if (a.base == B::Int) {
        if (b.base == B::Int) return NormalType::ints(int_intersect(a.int_ivs, int_complement(b.int_ivs)));
        if (b.base == B::Real)
            return NormalType::ints(int_intersect(a.int_ivs, int_complement(round_to_ints(b.real_ivs))));
    }
    if (a.base == B::Real && b.base == B::Real)
        return NormalType::reals(real_intersect(a.real_ivs, real_complement(b.real_ivs)));
    if (a.base == B::Real && b.base == B::Int) {
        // removing integer points; expressible only when finitely many fall inside
        auto hit = int_intersect(b.int_ivs, round_to_ints(a.real_ivs));
        std::vector<RealIv> punct;
        for (const auto& iv : hit) {
            if (iv.lo_inf || iv.hi_inf || iv.hi - iv.lo > 64) return std::nullopt;
            for (long long k = iv.lo; k <= iv.hi; ++k) {
                double v = (double)k;
                punct.push_back(RealIv{Bound::closed(v), Bound::closed(v)});
            }
        }
        return NormalType::reals(real_intersect(a.real_ivs, real_complement(canon_reals(punct))));
    }
    // structurally unrelated or not expressible: only trivial cases remain
    try {
        if (is_empty(intersect(a, b))) return a;
    } catch (const TypeError&) {
        return std::nullopt;
    }
    if (subtype(a, b)) return NormalType::bot();
    return std::nullopt;
}

NormalType type_join(const NormalType& a, const NormalType& b) {
    using B = NormalType::Base;
    if (a.base == B::Bot) return b;
    if (b.base == B::Bot) return a;
    if (a.base == B::Top || b.base == B::Top) return NormalType::top();
    if (a.base == B::Param && b.base == B::Param && a.param == b.param) return a;
    if (a.base == B::List && b.base == B::List) return NormalType::list(type_join(*a.elem, *b.elem));
    if (a.base == B::Int && b.base == B::Int) {
        auto ivs = a.int_ivs;
        ivs.insert(ivs.end(), b.int_ivs.begin(), b.int_ivs.end());
        return NormalType::ints(std::move(ivs));
    }
    auto promote = [](const NormalType& t) {
        std::vector<RealIv> out;
        for (const auto& iv : t.int_ivs) {
            RealIv r;
            r.lo = iv.lo_inf ? Bound::neg_inf() : Bound::closed((double)iv.lo);
            r.hi = iv.hi_inf ? Bound::pos_inf() : Bound::closed((double)iv.hi);
            out.push_back(r);
        }
        return out;
    };
    if (a.base == B::Real && b.base == B::Real) {
        auto ivs = a.real_ivs;
        ivs.insert(ivs.end(), b.real_ivs.begin(), b.real_ivs.end());
        return NormalType::reals(std::move(ivs));
    }
    if (a.base == B::Int && b.base == B::Real) {
        auto ivs = promote(a);
        ivs.insert(ivs.end(), b.real_ivs.begin(), b.real_ivs.end());
        return NormalType::reals(std::move(ivs));
    }
    if (a.base == B::Real && b.base == B::Int) return type_join(b, a);
    return NormalType::top();
}

bool vec_subtype(const TypeVector& a, const TypeVector& b) {
    if (a.size() != b.size()) throw TypeError("type vectors have different domains");
    for (const auto& [pos, ta] : a) {
        auto it = b.find(pos);
        if (it == b.end()) throw TypeError("type vectors have different domains");
        if (!subtype(ta, it->second)) return false;
    }
    return true;
}

bool vec_intersects(const TypeVector& a, const TypeVector& b) {
    if (a.size() != b.size()) throw TypeError("type vectors have different domains");
    for (const auto& [pos, ta] : a) {
        auto it = b.find(pos);
        if (it == b.end()) throw TypeError("type vectors have different domains");
        if (is_empty(intersect(ta, it->second))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Ground values and membership

GroundValue GroundValue::of_list(std::vector<GroundValue> xs) {
    GroundValue g;
    g.kind = Kind::List;
    g.items = std::move(xs);
    return g;
}

GroundValue GroundValue::compound(std::string f, std::vector<GroundValue> xs) {
    GroundValue g;
    g.kind = Kind::Compound;
    g.functor = std::move(f);
    g.items = std::move(xs);
    return g;
}

bool GroundValue::operator==(const GroundValue& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Int: return i == o.i;
        case Kind::Real: return r == o.r;
        case Kind::List: return items == o.items;
        case Kind::Compound: return functor == o.functor && items == o.items;
    }
    return false;
}

bool GroundValue::operator<(const GroundValue& o) const {
    if (kind != o.kind) return (int)kind < (int)o.kind;
    switch (kind) {
        case Kind::Int: return i < o.i;
        case Kind::Real: return r < o.r;
        case Kind::List: return items < o.items;
        case Kind::Compound:
            if (functor != o.functor) return functor < o.functor;
            return items < o.items;
    }
    return false;
}

double GroundValue::num() const {
    if (kind == Kind::Int) return (double)i;
    if (kind == Kind::Real) return r;
    throw TypeError("value is not numeric");
}

bool member(const GroundValue& v, const NormalType& t) {
    using B = NormalType::Base;
    switch (t.base) {
        case B::Top: return true;
        case B::Bot: return false;
        case B::Param: return true;  // schematic: no constraint
        case B::List:
            if (v.kind != GroundValue::Kind::List) return false;
            for (const auto& x : v.items)
                if (!member(x, *t.elem)) return false;
            return true;
        case B::Int:
            if (v.kind != GroundValue::Kind::Int) return false;
            for (const auto& iv : t.int_ivs) {
                if (!iv.lo_inf && v.i < iv.lo) continue;
                if (!iv.hi_inf && v.i > iv.hi) continue;
                return true;
            }
            return false;
        case B::Real: {
            if (!v.is_numeric()) return false;
            double x = v.num();
            for (const auto& iv : t.real_ivs)
                if (in_real_iv(x, iv)) return true;
            return false;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parameter matching

bool match_type(const NormalType& actual, const NormalType& pattern,
                std::map<std::string, NormalType>& bindings) {
    using B = NormalType::Base;
    if (pattern.base == B::Param) {
        auto it = bindings.find(pattern.param);
        if (it == bindings.end()) {
            bindings.emplace(pattern.param, actual);
        } else {
            it->second = type_join(it->second, actual);
        }
        return true;
    }
    if (actual.base == B::Bot) return true;
    if (pattern.base == B::List) {
        if (actual.base != B::List) return false;
        return match_type(*actual.elem, *pattern.elem, bindings);
    }
    return subtype(actual, pattern);
}

NormalType instantiate(const NormalType& pattern, const std::map<std::string, NormalType>& bindings) {
    using B = NormalType::Base;
    if (pattern.base == B::Param) {
        auto it = bindings.find(pattern.param);
        return it == bindings.end() ? pattern : it->second;
    }
    if (pattern.base == B::List) return NormalType::list(instantiate(*pattern.elem, bindings));
    return pattern;
}

// ---------------------------------------------------------------------------
// Printing

static std::string fmt_num(double v) {
    if (v == (long long)v && std::abs(v) < 1e15) {
        return std::to_string((long long)v);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

static std::string fmt_lower(const Bound& b) {
    if (b.kind == Bound::NegInf) return "minf";
    if (b.kind == Bound::PosInf) return "pinf";
    return b.open ? "o(" + fmt_num(b.value) + ")" : fmt_num(b.value);
}

static std::string fmt_upper(const Bound& b) {
    if (b.kind == Bound::PosInf) return "pinf";
    if (b.kind == Bound::NegInf) return "minf";
    return b.open ? "o(" + fmt_num(b.value) + ")" : fmt_num(b.value);
}

static RealIv real_hull(const std::vector<RealIv>& ivs) {
    return RealIv{ivs.front().lo, ivs.back().hi};
}

static std::string real_iv_str(const RealIv& iv) {
    if (iv.lo.kind == Bound::NegInf && iv.hi.kind == Bound::PosInf) return "real";
    return "real(" + fmt_lower(iv.lo) + "," + fmt_upper(iv.hi) + ")";
}

static std::string int_iv_str(const IntIv& iv) {
    if (iv.lo_inf && iv.hi_inf) return "int";
    std::string lo = iv.lo_inf ? "minf" : std::to_string(iv.lo);
    std::string hi = iv.hi_inf ? "pinf" : std::to_string(iv.hi);
    return "int(" + lo + "," + hi + ")";
}

std::string to_string(const NormalType& t) {
    using B = NormalType::Base;
    switch (t.base) {
        case B::Top: return "top";
        case B::Bot: return "bot";
        case B::Param: return t.param;
        case B::List: return "list(" + to_string(*t.elem) + ")";
        case B::Int: {
            if (t.int_ivs.size() == 1) return int_iv_str(t.int_ivs[0]);
            // hull-and-gaps difference form so the result reparses
            IntIv hull;
            hull.lo_inf = t.int_ivs.front().lo_inf;
            hull.lo = t.int_ivs.front().lo;
            hull.hi_inf = t.int_ivs.back().hi_inf;
            hull.hi = t.int_ivs.back().hi;
            std::string s = int_iv_str(hull);
            for (size_t i = 0; i + 1 < t.int_ivs.size(); ++i) {
                IntIv gap;
                gap.lo = t.int_ivs[i].hi + 1;
                gap.hi = t.int_ivs[i + 1].lo - 1;
                s += " and not(" + int_iv_str(gap) + ")";
            }
            return s;
        }
        case B::Real: {
            if (t.real_ivs.size() == 1) return real_iv_str(t.real_ivs[0]);
            std::string s = real_iv_str(real_hull(t.real_ivs));
            for (size_t i = 0; i + 1 < t.real_ivs.size(); ++i) {
                RealIv gap;
                gap.lo = t.real_ivs[i].hi;
                gap.lo.open = !gap.lo.open;
                gap.hi = t.real_ivs[i + 1].lo;
                gap.hi.open = !gap.hi.open;
                s += " and not(" + real_iv_str(gap) + ")";
            }
            return s;
        }
    }
    return "?";
}

std::string to_string(const GroundValue& v) {
    switch (v.kind) {
        case GroundValue::Kind::Int: return std::to_string(v.i);
        case GroundValue::Kind::Real: {
            std::string s = fmt_num(v.r);
            if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
            return s;
        }
        case GroundValue::Kind::List: {
            std::string s = "[";
            for (size_t i = 0; i < v.items.size(); ++i) {
                if (i) s += ",";
                s += to_string(v.items[i]);
            }
            return s + "]";
        }
        case GroundValue::Kind::Compound: {
            if (v.items.empty()) return v.functor;
            std::string s = v.functor + "(";
            for (size_t i = 0; i < v.items.size(); ++i) {
                if (i) s += ",";
                s += to_string(v.items[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

std::string to_string(const TypeExpr& t) {
    using K = TypeExpr::Kind;
    switch (t.kind) {
        case K::Top: return "top";
        case K::Bot: return "bot";
        case K::Param: return t.param;
        case K::List: return "list(" + to_string(t.sub[0]) + ")";
        case K::Not: return "not(" + to_string(t.sub[0]) + ")";
        case K::And: return to_string(t.sub[0]) + " and " + to_string(t.sub[1]);
        case K::Interval: {
            std::string base = t.int_base ? "int" : "real";
            return base + "(" + fmt_lower(t.lo) + "," + fmt_upper(t.hi) + ")";
        }
    }
    return "?";
}

}  // namespace negsimp
