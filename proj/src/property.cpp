#include "negsimp/property.hpp"

namespace negsimp {

bool ExistenceProperty::has_outputs() const {
    for (const auto& s : slots)
        if (!s.input) return true;
    return false;
}

void PropertyStore::validate(const ExistenceProperty& p) const {
    using K = ExistenceProperty::Kind;
    if (p.kind == K::Misc) {
        if (p.misc_lhs.pred.empty() || p.misc_rhs.pred.empty())
            throw PropertyError("misc property needs both atoms");
        for (const auto& t : p.misc_lhs.args)
            if (!t.is_var()) throw PropertyError("misc property lhs arguments must be distinct variables");
        return;
    }
    if (p.arity <= 0 || (int)p.slots.size() != p.arity)
        throw PropertyError("property slots must cover positions 1..arity");
    bool any = false;
    for (const auto& s : p.slots) {
        if (s.input) {
            any = true;
            continue;
        }
        any = true;
        if (p.kind == K::Exists) {
            if (is_empty(s.exists_ty)) throw PropertyError("output subtype normalizes to bot");
            continue;
        }
        if (p.indices.empty()) throw PropertyError("eu/es property needs a nonempty index set");
        if ((int)s.out_tys.size() != (int)p.indices.size())
            throw PropertyError("output slot does not cover the index set");
        for (int i : p.indices) {
            auto it = s.out_tys.find(i);
            if (it == s.out_tys.end()) throw PropertyError("output slot does not cover the index set");
            if (is_empty(it->second)) throw PropertyError("output subtype normalizes to bot");
        }
    }
    if (!any) throw PropertyError("property needs at least one slot");
    if ((p.kind == K::Eu || p.kind == K::Es) && !p.has_outputs())
        throw PropertyError("eu/es property needs at least one output slot");
    for (const auto& q : props_) {
        if (q.kind == K::Misc) continue;
        if (q.pred == p.pred && q.arity != p.arity)
            throw PropertyError("arity clash with earlier declaration of " + p.pred);
    }
}

void PropertyStore::declare(ExistenceProperty p) {
    validate(p);
    props_.push_back(std::move(p));
}

std::vector<const ExistenceProperty*> PropertyStore::lookup(
    const std::string& pred, int arity, const std::set<ExistenceProperty::Kind>& kinds) const {
    std::vector<const ExistenceProperty*> out;
    for (const auto& p : props_) {
        if (!kinds.count(p.kind)) continue;
        if (p.kind == ExistenceProperty::Kind::Misc) {
            if (p.misc_lhs.pred == pred && p.misc_lhs.arity() == arity) out.push_back(&p);
        } else if (p.pred == pred && p.arity == arity) {
            out.push_back(&p);
        }
    }
    return out;
}

int PropertyStore::count_for(const std::string& pred, int arity) const {
    int n = 0;
    for (const auto& p : props_) {
        if (p.kind == ExistenceProperty::Kind::Misc) {
            if (p.misc_lhs.pred == pred && p.misc_lhs.arity() == arity) ++n;
        } else if (p.pred == pred && p.arity == arity) {
            ++n;
        }
    }
    return n;
}

const std::vector<ExistenceProperty>& PropertyStore::chan_family(int eq_arity) const {
    auto it = chan_cache_.find(eq_arity);
    if (it != chan_cache_.end()) return it->second;

    std::vector<ExistenceProperty> fam;
    // forall y1..yn : top, exactly one x : top with x = f(y1..yn)
    ExistenceProperty eu;
    eu.kind = ExistenceProperty::Kind::Eu;
    eu.pred = "=";
    eu.arity = eq_arity;
    eu.indices = {1};
    for (int p = 1; p <= eq_arity; ++p) {
        ExistenceProperty::Slot s;
        if (p == 1) {
            s.input = false;
            s.out_tys[1] = NormalType::top();
        } else {
            s.input = true;
            s.in_ty = NormalType::top();
        }
        eu.slots.push_back(std::move(s));
    }
    fam.push_back(std::move(eu));

    // forall x : top, at most one y1..yn : top with x = f(y1..yn)
    ExistenceProperty es;
    es.kind = ExistenceProperty::Kind::Es;
    es.pred = "=";
    es.arity = eq_arity;
    es.indices = {1};
    for (int p = 1; p <= eq_arity; ++p) {
        ExistenceProperty::Slot s;
        if (p == 1) {
            s.input = true;
            s.in_ty = NormalType::top();
        } else {
            s.input = false;
            s.out_tys[1] = NormalType::top();
        }
        es.slots.push_back(std::move(s));
    }
    fam.push_back(std::move(es));

    return chan_cache_.emplace(eq_arity, std::move(fam)).first->second;
}

void seed_builtins(PropertyStore& store) {
    auto real = NormalType::all_real();
    auto posreal = NormalType::real_range(Bound::open_at(0), Bound::pos_inf());
    auto negreal = NormalType::real_range(Bound::neg_inf(), Bound::open_at(0));
    auto posint = NormalType::ints({IntIv{false, true, 1, 0}});
    auto negint = NormalType::ints({IntIv{true, false, 0, -1}});

    auto in = [](NormalType t) {
        ExistenceProperty::Slot s;
        s.input = true;
        s.in_ty = std::move(t);
        return s;
    };
    auto out1 = [](NormalType t) {
        ExistenceProperty::Slot s;
        s.input = false;
        s.out_tys[1] = std::move(t);
        return s;
    };

    // add/3 exists-unique in each argument direction over the reals
    for (int outpos = 1; outpos <= 3; ++outpos) {
        ExistenceProperty p;
        p.kind = ExistenceProperty::Kind::Eu;
        p.pred = "add";
        p.arity = 3;
        p.indices = {1};
        for (int pos = 1; pos <= 3; ++pos)
            p.slots.push_back(pos == outpos ? out1(real) : in(real));
        store.declare(std::move(p));
    }

    // sq/2 forward: every real has exactly one square
    {
        ExistenceProperty p;
        p.kind = ExistenceProperty::Kind::Eu;
        p.pred = "sq";
        p.arity = 2;
        p.indices = {1};
        p.slots.push_back(in(real));
        p.slots.push_back(out1(real));
        store.declare(std::move(p));
    }

    // sq/2 backward: a positive real has one negative and one positive root
    {
        ExistenceProperty p;
        p.kind = ExistenceProperty::Kind::Eu;
        p.pred = "sq";
        p.arity = 2;
        p.indices = {1, 2};
        ExistenceProperty::Slot s;
        s.input = false;
        s.out_tys[1] = negreal;
        s.out_tys[2] = posreal;
        p.slots.push_back(std::move(s));
        p.slots.push_back(in(posreal));
        store.declare(std::move(p));
    }

    // sq/2 over the integers: at most one root of each sign
    {
        ExistenceProperty p;
        p.kind = ExistenceProperty::Kind::Es;
        p.pred = "sq";
        p.arity = 2;
        p.indices = {1, 2};
        ExistenceProperty::Slot s;
        s.input = false;
        s.out_tys[1] = negint;
        s.out_tys[2] = posint;
        p.slots.push_back(std::move(s));
        p.slots.push_back(in(posint));
        store.declare(std::move(p));
    }

    // not lt(x,y) <=> geq(x,y) over the integers
    {
        ExistenceProperty p;
        p.kind = ExistenceProperty::Kind::Misc;
        Term x = Term::mkvar(0), y = Term::mkvar(1);
        p.misc_lhs = Atom{"lt", {x, y}, ""};
        p.misc_rhs = Atom{"geq", {x, y}, ""};
        p.misc_env.set(0, NormalType::all_int());
        p.misc_env.set(1, NormalType::all_int());
        store.declare(std::move(p));
    }
}

}  // namespace negsimp
