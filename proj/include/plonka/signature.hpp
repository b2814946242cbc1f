#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "plonka/error.hpp"

namespace plonka {

// Identifier lexical rule: [A-Za-z_][A-Za-z0-9_']*
bool is_identifier(const std::string& s);

// Operation symbols with arities. Symbol names are unique identifiers,
// arities are >= 0.
class Signature {
  public:
    Signature() = default;
    explicit Signature(std::map<std::string, int> ops);

    bool has(const std::string& name) const { return ops_.count(name) != 0; }
    int arity(const std::string& name) const;
    const std::map<std::string, int>& ops() const { return ops_; }

    bool has_constants() const;
    // Some symbol of arity >= 1; required of any signature used in a sum.
    bool has_proper_op() const;

    bool operator==(const Signature&) const = default;

  private:
    std::map<std::string, int> ops_;
};

// A term is a variable leaf or an application of a signature symbol.
// Nullary symbols are applications with no arguments; they print and
// parse without parentheses.
struct Term {
    std::string head;
    bool var = true;
    std::vector<Term> args;

    static Term variable(std::string name);
    static Term apply(std::string op, std::vector<Term> arguments = {});

    bool operator==(const Term&) const = default;
};

// Variables have depth 0, applications 1 + max child depth
// (so nullary applications have depth 1).
int depth(const Term& t);

std::set<std::string> variables(const Term& t);

std::string to_string(const Term& t);

// Well-formedness over a signature: every application symbol exists with
// arity = argument count, every variable name is an identifier. Throws.
void check_term(const Term& t, const Signature& sig);

// Canonical term order: by depth, then head name, then children
// recursively. Used for enumeration and first-witness determinism.
bool canonical_less(const Term& a, const Term& b);

// Grammar: term := IDENT | IDENT "(" term ("," term)* ")"
// Identifiers declared in sig are operations, all others are variables.
Term parse_term(const std::string& text, const Signature& sig);

struct Identity {
    Term lhs;
    Term rhs;

    bool operator==(const Identity&) const = default;
};

// Identity concrete syntax: term "=" term.
Identity parse_identity(const std::string& text, const Signature& sig);

std::string to_string(const Identity& id);

// Var(lhs) = Var(rhs) as sets.
bool is_regular(const Identity& id);

// All well-formed terms over sig and vars with depth <= max_depth, in
// canonical order, no duplicates.
std::vector<Term> enumerate_terms(const Signature& sig,
                                  const std::vector<std::string>& vars,
                                  int max_depth);

// One canonical layer: the terms of depth exactly d, given all terms of
// smaller depth. enumerate_terms is the concatenation of these layers;
// exposed so searches can stop before building deeper layers.
std::vector<Term> enumerate_terms_at(const Signature& sig,
                                     const std::vector<std::string>& vars,
                                     int d, const std::vector<Term>& shallower);

}  // namespace plonka
