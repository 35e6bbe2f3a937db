#pragma once

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace normcheck {

/// First-order term: a constant, a variable, or a functor applied to
/// arguments. A constant is a functor with no arguments.
class Term {
public:
    Term() = default;

    static Term constant(std::string name);
    static Term variable(std::string name);
    static Term compound(std::string functor, std::vector<Term> args);

    bool is_variable() const { return variable_; }
    bool is_constant() const { return !variable_ && args_.empty(); }
    bool is_ground() const;

    const std::string& name() const { return name_; }
    const std::vector<Term>& args() const { return args_; }
    std::size_t arity() const { return args_.size(); }

    void collect_variables(std::set<std::string>& out) const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator<(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    std::string name_;
    std::vector<Term> args_;
    bool variable_ = false;
};

/// Canonical spelling without spaces: f(a,g(b)).
std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// Variable name -> ground term. Functional by construction.
using Binding = std::map<std::string, Term>;

/// Replaces bound variables; unbound ones stay as they are.
Term substitute(const Term& t, const Binding& b);

/// One-way matching of a pattern against a ground term, extending `b`.
/// Leaves `b` untouched on failure.
bool match(const Term& pattern, const Term& ground, Binding& b);

} // namespace normcheck
