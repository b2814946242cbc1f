#include "plonka/fixtures.hpp"

#include "plonka/stone.hpp"

namespace plonka::fixtures {

FiniteAlgebra b2() {
    FiniteAlgebra a;
    a.sig = boolean_signature();
    a.size = 2;
    a.names = {"0", "1"};
    a.tables["and"] = {0, 0, 0, 1};
    a.tables["or"] = {0, 1, 1, 1};
    a.tables["not"] = {1, 0};
    a.tables["zero"] = {0};
    a.tables["one"] = {1};
    return a;
}

FiniteAlgebra b4_named(const std::vector<std::string>& names) {
    // Elements 0, a, a', 1 in that order; a and a' are the two atoms.
    FiniteAlgebra a;
    a.sig = boolean_signature();
    a.size = 4;
    a.names = names;
    a.tables["and"] = {0, 0, 0, 0,   //
                       0, 1, 0, 1,   //
                       0, 0, 2, 2,   //
                       0, 1, 2, 3};
    a.tables["or"] = {0, 1, 2, 3,   //
                      1, 1, 3, 3,   //
                      2, 3, 2, 3,   //
                      3, 3, 3, 3};
    a.tables["not"] = {3, 2, 1, 0};
    a.tables["zero"] = {0};
    a.tables["one"] = {3};
    return a;
}

FiniteAlgebra b4() { return b4_named({"0", "a", "a'", "1"}); }

DirectSystem ex22() {
    SystemCandidate c;
    c.join = {{0, 1}, {1, 1}};
    c.index_names = {"i", "j"};
    c.fibers = {b4_named({"0_i", "a", "a'", "1_i"}),
                b4_named({"0_j", "b", "b'", "1_j"})};
    c.transitions[{0, 1}] = {0, 3, 0, 3};
    return make_direct_system(std::move(c));
}

Term tw() { return parse_term("and(x, or(x, y))", boolean_signature()); }

std::vector<std::string> transfer_identity_strings() {
    return {
        "and(x, y) = and(y, x)",
        "or(x, y) = or(y, x)",
        "and(and(x, y), z) = and(x, and(y, z))",
        "or(or(x, y), z) = or(x, or(y, z))",
        "and(x, x) = x",
        "or(x, x) = x",
        "not(and(x, y)) = or(not(x), not(y))",
        "not(or(x, y)) = and(not(x), not(y))",
        "not(not(x)) = x",
        "and(x, or(y, z)) = or(and(x, y), and(x, z))",
        "and(x, or(x, y)) = x",
        "or(x, not(x)) = one",
    };
}

std::vector<Identity> transfer_identities() {
    std::vector<Identity> out;
    for (const std::string& s : transfer_identity_strings())
        out.push_back(parse_identity(s, boolean_signature()));
    return out;
}

}  // namespace plonka::fixtures
