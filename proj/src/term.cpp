#include "normcheck/term.hpp"

#include <algorithm>

namespace normcheck {

Term Term::constant(std::string name) {
    Term t;
    t.name_ = std::move(name);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.name_ = std::move(name);
    t.variable_ = true;
    return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
    Term t;
    t.name_ = std::move(functor);
    t.args_ = std::move(args);
    return t;
}

bool Term::is_ground() const {
    if (variable_) return false;
    return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

void Term::collect_variables(std::set<std::string>& out) const {
    if (variable_) {
        out.insert(name_);
        return;
    }
    for (const auto& a : args_) a.collect_variables(out);
}

bool operator==(const Term& a, const Term& b) {
    return a.variable_ == b.variable_ && a.name_ == b.name_ && a.args_ == b.args_;
}

bool operator<(const Term& a, const Term& b) {
    if (a.variable_ != b.variable_) return a.variable_ < b.variable_;
    if (a.name_ != b.name_) return a.name_ < b.name_;
    return std::lexicographical_compare(a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end());
}

std::string to_string(const Term& t) {
    std::string out = t.name();
    if (t.arity() == 0) return out;
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ',';
        out += to_string(t.args()[i]);
    }
    out += ')';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

Term substitute(const Term& t, const Binding& b) {
    if (t.is_variable()) {
        auto it = b.find(t.name());
        return it == b.end() ? t : it->second;
    }
    if (t.arity() == 0) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const auto& a : t.args()) args.push_back(substitute(a, b));
    return Term::compound(t.name(), std::move(args));
}

namespace {

bool match_into(const Term& pattern, const Term& ground, Binding& b) {
    if (pattern.is_variable()) {
        auto [it, inserted] = b.emplace(pattern.name(), ground);
        return inserted || it->second == ground;
    }
    if (pattern.name() != ground.name() || pattern.arity() != ground.arity() || ground.is_variable()) return false;
    for (std::size_t i = 0; i < pattern.arity(); ++i) {
        if (!match_into(pattern.args()[i], ground.args()[i], b)) return false;
    }
    return true;
}

} // namespace

bool match(const Term& pattern, const Term& ground, Binding& b) {
    Binding scratch = b;
    if (!match_into(pattern, ground, scratch)) return false;
    b = std::move(scratch);
    return true;
}

} // namespace normcheck
