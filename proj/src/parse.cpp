#include "negsimp/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace negsimp {

namespace {

struct Token {
    enum class K { Ident, Var, Num, Punct, End };
    K kind = K::End;
    std::string text;
    double num = 0.0;
    bool num_int = true;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    Token expect(const std::string& punct) {
        if (cur_.kind != Token::K::Punct || cur_.text != punct)
            throw SyntaxError("expected '" + punct + "'", cur_.line, cur_.col);
        return next();
    }

    bool accept(const std::string& punct) {
        if (cur_.kind == Token::K::Punct && cur_.text == punct) {
            advance();
            return true;
        }
        return false;
    }

    std::string expect_ident() {
        if (cur_.kind != Token::K::Ident)
            throw SyntaxError("expected identifier", cur_.line, cur_.col);
        return next().text;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg, cur_.line, cur_.col);
    }

  private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            if (!std::isspace((unsigned char)c)) break;
            if (c == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        cur_ = Token{};
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
                take();
            cur_.text = text_.substr(start, pos_ - start);
            cur_.kind = (std::isupper((unsigned char)c) || c == '_') ? Token::K::Var : Token::K::Ident;
            return;
        }
        bool neg = c == '-' && pos_ + 1 < text_.size() && std::isdigit((unsigned char)text_[pos_ + 1]);
        if (std::isdigit((unsigned char)c) || neg) {
            size_t start = pos_;
            if (neg) take();
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) take();
            bool is_int = true;
            if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
                std::isdigit((unsigned char)text_[pos_ + 1])) {
                is_int = false;
                take();
                while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) take();
            }
            cur_.kind = Token::K::Num;
            cur_.text = text_.substr(start, pos_ - start);
            cur_.num = std::strtod(cur_.text.c_str(), nullptr);
            cur_.num_int = is_int;
            return;
        }
        if (c == '<' && text_.compare(pos_, 3, "<~>") == 0) {
            cur_.kind = Token::K::Punct;
            cur_.text = "<~>";
            take();
            take();
            take();
            return;
        }
        static const std::string singles = "()[]{},:=./";
        if (singles.find(c) != std::string::npos) {
            cur_.kind = Token::K::Punct;
            cur_.text = std::string(1, c);
            take();
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void take() {
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

// ---------------------------------------------------------------------------
// Types

std::optional<NormalType> named_type(const std::string& name) {
    if (name == "posint") return NormalType::ints({IntIv{false, true, 1, 0}});
    if (name == "negint") return NormalType::ints({IntIv{true, false, 0, -1}});
    if (name == "posreal")
        return NormalType::real_range(Bound::open_at(0), Bound::pos_inf());
    if (name == "negreal")
        return NormalType::real_range(Bound::neg_inf(), Bound::open_at(0));
    return std::nullopt;
}

Bound parse_bound(Lexer& lx) {
    if (lx.peek().kind == Token::K::Ident) {
        std::string id = lx.next().text;
        if (id == "minf") return Bound::neg_inf();
        if (id == "pinf") return Bound::pos_inf();
        if (id == "o") {
            lx.expect("(");
            if (lx.peek().kind != Token::K::Num) lx.fail("expected number");
            double v = lx.next().num;
            lx.expect(")");
            return Bound::open_at(v);
        }
        lx.fail("expected bound");
    }
    if (lx.peek().kind != Token::K::Num) lx.fail("expected bound");
    return Bound::closed(lx.next().num);
}

TypeExpr parse_type_prim(Lexer& lx) {
    std::string id = lx.expect_ident();
    if (id == "top") return TypeExpr::top();
    if (id == "bot") return TypeExpr::bot();
    if (id == "int" || id == "real") {
        if (!lx.accept("("))
            return TypeExpr::interval(id == "int", Bound::neg_inf(), Bound::pos_inf());
        Bound lo = parse_bound(lx);
        lx.expect(",");
        Bound hi = parse_bound(lx);
        lx.expect(")");
        return TypeExpr::interval(id == "int", lo, hi);
    }
    if (id == "list") {
        lx.expect("(");
        TypeExpr e = parse_type_prim(lx);
        while (lx.peek().kind == Token::K::Ident && lx.peek().text == "and") {
            lx.next();
            e = TypeExpr::conj(e, parse_type_prim(lx));
        }
        lx.expect(")");
        return TypeExpr::list(e);
    }
    if (id == "not") {
        lx.expect("(");
        TypeExpr e = parse_type_prim(lx);
        while (lx.peek().kind == Token::K::Ident && lx.peek().text == "and") {
            lx.next();
            e = TypeExpr::conj(e, parse_type_prim(lx));
        }
        lx.expect(")");
        return TypeExpr::neg(e);
    }
    return TypeExpr::parameter(id);
}

NormalType parse_type(Lexer& lx) {
    if (lx.peek().kind == Token::K::Ident) {
        auto nt = named_type(lx.peek().text);
        if (nt) {
            lx.next();
            return *nt;
        }
    }
    TypeExpr e = parse_type_prim(lx);
    while (lx.peek().kind == Token::K::Ident && lx.peek().text == "and") {
        lx.next();
        e = TypeExpr::conj(e, parse_type_prim(lx));
    }
    return normalize(e);
}

// ---------------------------------------------------------------------------
// Goals

struct GoalCtx {
    Session* s;
    ParsedGoal* g;
    std::set<VarId> seen;
};

void note_var(GoalCtx& cx, Lexer& lx, VarId v, bool typed, const NormalType& ty) {
    bool first = cx.seen.insert(v).second;
    bool local = cx.g->locals.count(v) != 0;
    if (!first) {
        if (typed) {
            const NormalType& prev = local ? cx.g->locals.at(v) : cx.g->env.type_of_var(v);
            if (!equiv(prev, ty)) lx.fail("type contradicts the variable's first occurrence");
        }
        return;
    }
    if (typed) {
        if (local)
            cx.g->locals[v] = ty;
        else
            cx.g->env.set(v, ty);
    } else if (!local) {
        cx.g->env.set(v, NormalType::top());
    }
}

Term parse_term(GoalCtx& cx, Lexer& lx);

std::vector<Term> parse_termlist(GoalCtx& cx, Lexer& lx) {
    std::vector<Term> out;
    out.push_back(parse_term(cx, lx));
    while (lx.accept(",")) out.push_back(parse_term(cx, lx));
    return out;
}

Term parse_term(GoalCtx& cx, Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind == Token::K::Num) {
        Token n = lx.next();
        return n.num_int ? Term::int_const((long long)n.num) : Term::real_const(n.num);
    }
    if (t.kind == Token::K::Var) {
        Token v = lx.next();
        VarId id = cx.s->intern(v.text);
        bool typed = false;
        NormalType ty;
        if (lx.accept(":")) {
            typed = true;
            ty = parse_type(lx);
        }
        note_var(cx, lx, id, typed, ty);
        return Term::mkvar(id);
    }
    if (t.kind == Token::K::Punct && t.text == "[") {
        lx.next();
        if (lx.accept("]")) return Term::nil();
        std::vector<Term> items = parse_termlist(cx, lx);
        lx.expect("]");
        Term out = Term::nil();
        for (auto it = items.rbegin(); it != items.rend(); ++it) out = Term::cons(*it, out);
        return out;
    }
    if (t.kind == Token::K::Ident) {
        std::string f = lx.next().text;
        if (!lx.accept("(")) return Term::compound(f, {});
        std::vector<Term> args = parse_termlist(cx, lx);
        lx.expect(")");
        return Term::compound(f, std::move(args));
    }
    lx.fail("expected term");
}

Atom parse_goal_atom(GoalCtx& cx, Lexer& lx) {
    Term first = parse_term(cx, lx);
    if (lx.accept("=")) {
        Term rhs = parse_term(cx, lx);
        if (rhs.kind != Term::Kind::Compound)
            lx.fail("right side of = must be a constructed term");
        Atom a;
        a.pred = "=";
        a.eq_functor = rhs.functor;
        a.args.push_back(first);
        for (auto& x : rhs.args) a.args.push_back(std::move(x));
        return a;
    }
    if (first.kind != Term::Kind::Compound) lx.fail("expected atom");
    Atom a;
    a.pred = first.functor;
    a.args = std::move(first.args);
    return a;
}

std::vector<Atom> parse_conj(GoalCtx& cx, Lexer& lx) {
    std::vector<Atom> out;
    bool wrapped = lx.accept("(");
    out.push_back(parse_goal_atom(cx, lx));
    if (wrapped) {
        while (lx.accept(",")) out.push_back(parse_goal_atom(cx, lx));
        lx.expect(")");
    }
    return out;
}

void parse_locals(GoalCtx& cx, Lexer& lx) {
    lx.expect("[");
    if (lx.accept("]")) return;
    do {
        if (lx.peek().kind != Token::K::Var) lx.fail("expected variable");
        VarId id = cx.s->intern(lx.next().text);
        cx.g->locals[id] = NormalType::top();
        if (lx.accept(":")) {
            cx.g->locals[id] = parse_type(lx);
            cx.seen.insert(id);
        }
    } while (lx.accept(","));
    lx.expect("]");
}

// ---------------------------------------------------------------------------
// Properties

struct MiscCtx {
    std::map<std::string, VarId> vars;
    TypeEnv env;
};

Term parse_misc_term(MiscCtx& cx, Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind == Token::K::Num) {
        Token n = lx.next();
        return n.num_int ? Term::int_const((long long)n.num) : Term::real_const(n.num);
    }
    if (t.kind == Token::K::Var) {
        Token v = lx.next();
        auto it = cx.vars.find(v.text);
        VarId id;
        if (it == cx.vars.end()) {
            id = (VarId)cx.vars.size();
            cx.vars.emplace(v.text, id);
            cx.env.set(id, NormalType::top());
        } else {
            id = it->second;
        }
        if (lx.accept(":")) cx.env.set(id, parse_type(lx));
        return Term::mkvar(id);
    }
    if (t.kind == Token::K::Ident) {
        std::string f = lx.next().text;
        if (!lx.accept("(")) return Term::compound(f, {});
        std::vector<Term> args;
        args.push_back(parse_misc_term(cx, lx));
        while (lx.accept(",")) args.push_back(parse_misc_term(cx, lx));
        lx.expect(")");
        return Term::compound(f, std::move(args));
    }
    lx.fail("expected term");
}

Atom parse_misc_atom(MiscCtx& cx, Lexer& lx) {
    Atom a;
    a.pred = lx.expect_ident();
    lx.expect("(");
    a.args.push_back(parse_misc_term(cx, lx));
    while (lx.accept(",")) a.args.push_back(parse_misc_term(cx, lx));
    lx.expect(")");
    return a;
}

ExistenceProperty::Slot parse_slot(Lexer& lx, bool exists_kind) {
    std::string tag = lx.expect_ident();
    ExistenceProperty::Slot slot;
    lx.expect("(");
    if (tag == "i") {
        slot.input = true;
        slot.in_ty = parse_type(lx);
    } else if (tag == "o") {
        slot.input = false;
        if (exists_kind) {
            slot.exists_ty = parse_type(lx);
        } else {
            lx.expect("[");
            do {
                lx.expect("(");
                if (lx.peek().kind != Token::K::Num) lx.fail("expected index");
                int idx = (int)lx.next().num;
                lx.expect(",");
                slot.out_tys[idx] = parse_type(lx);
                lx.expect(")");
            } while (lx.accept(","));
            lx.expect("]");
        }
    } else {
        lx.fail("expected slot i(..) or o(..)");
    }
    lx.expect(")");
    return slot;
}

ExistenceProperty parse_property(Lexer& lx) {
    std::string kw = lx.expect_ident();
    ExistenceProperty p;
    lx.expect("(");
    if (kw == "misc") {
        p.kind = ExistenceProperty::Kind::Misc;
        MiscCtx cx;
        p.misc_lhs = parse_misc_atom(cx, lx);
        lx.expect("<~>");
        p.misc_rhs = parse_misc_atom(cx, lx);
        p.misc_env = cx.env;
        p.pred = p.misc_lhs.pred;
        p.arity = p.misc_lhs.arity();
    } else if (kw == "eu" || kw == "es" || kw == "exists") {
        p.kind = kw == "eu"   ? ExistenceProperty::Kind::Eu
                 : kw == "es" ? ExistenceProperty::Kind::Es
                              : ExistenceProperty::Kind::Exists;
        bool exists_kind = p.kind == ExistenceProperty::Kind::Exists;
        p.pred = lx.expect_ident();
        lx.expect("(");
        do p.slots.push_back(parse_slot(lx, exists_kind));
        while (lx.accept(","));
        lx.expect(")");
        p.arity = (int)p.slots.size();
        if (!exists_kind) {
            lx.expect(",");
            lx.expect("[");
            do {
                if (lx.peek().kind != Token::K::Num) lx.fail("expected index");
                p.indices.push_back((int)lx.next().num);
            } while (lx.accept(","));
            lx.expect("]");
        }
    } else {
        lx.fail("expected eu, es, exists or misc");
    }
    lx.expect(")");
    lx.expect(".");
    return p;
}

// ---------------------------------------------------------------------------
// Models

GroundValue parse_value(Lexer& lx) {
    const Token& t = lx.peek();
    if (t.kind == Token::K::Num) {
        Token n = lx.next();
        return n.num_int ? GroundValue::of_int((long long)n.num) : GroundValue::of_real(n.num);
    }
    if (t.kind == Token::K::Punct && t.text == "[") {
        lx.next();
        std::vector<GroundValue> items;
        if (!lx.accept("]")) {
            do items.push_back(parse_value(lx));
            while (lx.accept(","));
            lx.expect("]");
        }
        return GroundValue::of_list(std::move(items));
    }
    if (t.kind == Token::K::Ident) {
        std::string f = lx.next().text;
        std::vector<GroundValue> args;
        if (lx.accept("(")) {
            do args.push_back(parse_value(lx));
            while (lx.accept(","));
            lx.expect(")");
        }
        return GroundValue::compound(f, std::move(args));
    }
    lx.fail("expected ground value");
}

}  // namespace

NormalType parse_type_text(const std::string& text) {
    Lexer lx(text);
    NormalType t = parse_type(lx);
    if (lx.peek().kind != Token::K::End) lx.fail("trailing input after type");
    return t;
}

ParsedGoal parse_goal(const std::string& text, Session& s) {
    Lexer lx(text);
    ParsedGoal g;
    GoalCtx cx{&s, &g, {}};
    std::string kw = lx.expect_ident();
    if (kw != "neg") lx.fail("expected neg(...)");
    lx.expect("(");
    // locals may come first (declaration order) or second (printed order)
    bool locals_first = lx.peek().kind == Token::K::Punct && lx.peek().text == "[";
    if (locals_first) {
        parse_locals(cx, lx);
        lx.expect(",");
        g.conj = parse_conj(cx, lx);
    } else {
        g.conj = parse_conj(cx, lx);
        lx.expect(",");
        parse_locals(cx, lx);
    }
    lx.expect(")");
    lx.expect(".");
    if (lx.peek().kind != Token::K::End) lx.fail("trailing input after goal");
    return g;
}

std::vector<ExistenceProperty> parse_properties(const std::string& text) {
    Lexer lx(text);
    std::vector<ExistenceProperty> out;
    while (lx.peek().kind != Token::K::End) out.push_back(parse_property(lx));
    return out;
}

FiniteModel parse_model(const std::string& text) {
    Lexer lx(text);
    FiniteModel m;
    while (lx.peek().kind != Token::K::End) {
        std::string kw = lx.expect_ident();
        if (kw == "carrier") {
            parse_type(lx);  // documentation; the universe is the union
            lx.expect("=");
            lx.expect("{");
            if (!lx.accept("}")) {
                do m.add_value(parse_value(lx));
                while (lx.accept(","));
                lx.expect("}");
            }
        } else if (kw == "extension") {
            std::string pred = lx.expect_ident();
            lx.expect("/");
            if (lx.peek().kind != Token::K::Num) lx.fail("expected arity");
            int arity = (int)lx.next().num;
            lx.expect("=");
            lx.expect("{");
            auto& ext = m.extensions[{pred, arity}];
            if (!lx.accept("}")) {
                do {
                    std::vector<GroundValue> tup;
                    if (lx.accept("(")) {
                        do tup.push_back(parse_value(lx));
                        while (lx.accept(","));
                        lx.expect(")");
                    } else {
                        tup.push_back(parse_value(lx));
                    }
                    if ((int)tup.size() != arity) lx.fail("tuple arity mismatch");
                    ext.insert(std::move(tup));
                } while (lx.accept(","));
                lx.expect("}");
            }
        } else if (kw == "builtin") {
            std::string pred = lx.expect_ident();
            lx.expect("=");
            std::string def = lx.expect_ident();
            if (def != "sq" && def != "add" && def != "lt" && def != "geq")
                lx.fail("unknown builtin " + def);
            m.builtins[pred] = def;
        } else {
            lx.fail("expected carrier, extension or builtin");
        }
        lx.expect(".");
    }
    return m;
}

}  // namespace negsimp
