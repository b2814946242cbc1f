#include <doctest.h>

#include <algorithm>

#include "plonka/algebra.hpp"
#include "plonka/fixtures.hpp"
#include "plonka/system.hpp"

using namespace plonka;

namespace {

// Naive oracle: filter all |B|^|A| total maps by the homomorphism
// condition, in lexicographic order.
std::vector<std::vector<int>> naive_hom_maps(const FiniteAlgebra& a,
                                             const FiniteAlgebra& b) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(a.size, 0);
    while (true) {
        if (is_homomorphism(ElementMap{a, b, map}).ok) out.push_back(map);
        int k = a.size - 1;
        while (k >= 0 && ++map[k] == b.size) map[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

FiniteAlgebra relabeled_b4(const std::vector<int>& perm) {
    FiniteAlgebra b4 = fixtures::b4();
    FiniteAlgebra out = b4;
    for (const auto& [op, flat] : b4.tables) {
        std::vector<int>& table = out.tables[op];
        if (op == "zero" || op == "one") {
            table = {perm[flat[0]]};
        } else if (op == "not") {
            for (int x = 0; x < 4; ++x) table[perm[x]] = perm[flat[x]];
        } else {
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y)
                    table[perm[x] * 4 + perm[y]] = perm[flat[x * 4 + y]];
        }
    }
    return out;
}

FiniteAlgebra two_element_join_semilattice() {
    FiniteAlgebra a;
    a.sig = Signature(std::map<std::string, int>{{"join", 2}});
    a.size = 2;
    a.names = {"0", "1"};
    a.tables["join"] = {0, 1, 1, 1};
    return a;
}

}  // namespace

TEST_CASE("evaluate computes through the tables") {
    FiniteAlgebra b4 = fixtures::b4();
    // 0=0, a=1, a'=2, 1=3
    CHECK(evaluate(b4, fixtures::tw(), {{"x", 1}, {"y", 2}}) == 1);
    CHECK_THROWS_AS(evaluate(b4, fixtures::tw(), {{"x", 1}}), error);

    Term foreign = Term::apply("join", {Term::variable("x")});
    CHECK_THROWS_AS(evaluate(b4, foreign, {{"x", 0}}), error);
}

TEST_CASE("evaluate reproduces the worked sum computations") {
    PlonkaAlgebra p22 = plonka_sum(fixtures::ex22());
    // 0_i=0, a=1, a'=2, 1_i=3, 0_j=4, b=5, b'=6, 1_j=7
    Term meet = parse_term("and(x, y)", p22.carrier.sig);
    CHECK(evaluate(p22.carrier, meet, {{"x", 2}, {"y", 5}}) == 4);
    CHECK(evaluate(p22.carrier, meet, {{"x", 1}, {"y", 2}}) == 0);
}

TEST_CASE("satisfies on B4") {
    FiniteAlgebra b4 = fixtures::b4();
    CHECK(satisfies(b4, parse_identity("and(x, y) = and(y, x)", b4.sig)));
    CHECK(satisfies(b4, parse_identity("and(x, or(x, y)) = x", b4.sig)));
}

TEST_CASE("satisfies on the sum: absorption fails, regular laws hold") {
    PlonkaAlgebra p22 = plonka_sum(fixtures::ex22());
    const FiniteAlgebra& a = p22.carrier;

    Identity absorption = parse_identity("and(x, or(x, y)) = x", a.sig);
    SatisfactionResult r = satisfies(a, absorption);
    REQUIRE_FALSE(r.holds);

    // Oracle: first failing assignment in odometer order over (x, y).
    Assignment first;
    for (int x = 0; x < a.size && first.empty(); ++x)
        for (int y = 0; y < a.size && first.empty(); ++y)
            if (evaluate(a, absorption.lhs, {{"x", x}, {"y", y}}) != x)
                first = {{"x", x}, {"y", y}};
    CHECK(r.counterexample == first);
    CHECK(first == Assignment{{"x", 0}, {"y", 4}});  // x = 0_i, y = 0_j

    // The worked pair a', b is also a counterexample: a' ^ (a' v b) = 0_j.
    CHECK(evaluate(a, absorption.lhs, {{"x", 2}, {"y", 5}}) == 4);

    CHECK(satisfies(a, parse_identity("not(not(x)) = x", a.sig)));
    CHECK(satisfies(a, parse_identity("and(x, y) = and(y, x)", a.sig)));
}

TEST_CASE("is_homomorphism") {
    FiniteAlgebra b4 = fixtures::b4();
    CHECK(is_homomorphism(ElementMap{b4, b4, {0, 1, 2, 3}}).ok);

    // The transition of the two-fiber fixture.
    CHECK(is_homomorphism(ElementMap{b4, b4, {0, 3, 0, 3}}).ok);

    // a and a' both to a: not is not preserved.
    HomCheck q = is_homomorphism(ElementMap{b4, b4, {0, 1, 1, 3}});
    CHECK_FALSE(q.ok);
    CHECK(q.witness.find("not") != std::string::npos);

    FiniteAlgebra b2 = fixtures::b2();
    CHECK_THROWS_AS(
        is_homomorphism(ElementMap{b4, two_element_join_semilattice(),
                                   {0, 0, 0, 1}}),
        error);
    CHECK_THROWS_AS(is_homomorphism(ElementMap{b4, b2, {0, 1}}), error);
}

TEST_CASE("homomorphism enumeration matches the naive filter") {
    FiniteAlgebra b2 = fixtures::b2();
    FiniteAlgebra b4 = fixtures::b4();

    CHECK(homomorphism_maps(b2, b2).size() == 1);
    CHECK(homomorphism_maps(b4, b2).size() == 2);
    CHECK(homomorphism_maps(b2, b4).size() == 1);
    CHECK(homomorphism_maps(b2, b4)[0] == std::vector<int>{0, 3});

    for (auto [src, dst] :
         {std::pair{&b2, &b2}, {&b4, &b2}, {&b2, &b4}, {&b4, &b4}}) {
        CAPTURE(src->size);
        CAPTURE(dst->size);
        CHECK(homomorphism_maps(*src, *dst) == naive_hom_maps(*src, *dst));
    }

    for (const ElementMap& m : enumerate_homomorphisms(b4, b4))
        CHECK(is_homomorphism(m).ok);
}

TEST_CASE("hom enumeration respects the source size bound") {
    FiniteAlgebra b4 = fixtures::b4();
    CHECK_THROWS_AS(homomorphism_maps(b4, b4, 3), error);
    CHECK_NOTHROW(homomorphism_maps(b4, b4, 4));
}

TEST_CASE("find_isomorphism") {
    FiniteAlgebra b4 = fixtures::b4();
    std::vector<int> perm = {2, 0, 3, 1};
    FiniteAlgebra shuffled = relabeled_b4(perm);

    auto iso = find_isomorphism(b4, shuffled);
    REQUIRE(iso.has_value());
    CHECK(is_homomorphism(*iso).ok);
    std::vector<int> inverse(4);
    for (int k = 0; k < 4; ++k) inverse[iso->map[k]] = k;
    CHECK(is_homomorphism(ElementMap{shuffled, b4, inverse}).ok);
    // The relabeling itself, possibly composed with the atom swap.
    std::vector<int> swapped = {perm[0], perm[2], perm[1], perm[3]};
    CHECK((iso->map == perm || iso->map == swapped));

    CHECK_FALSE(find_isomorphism(b4, fixtures::b2()).has_value());
    CHECK(find_isomorphism(b4, b4).has_value());
}

TEST_CASE("satisfaction is preserved under isomorphism") {
    FiniteAlgebra b4 = fixtures::b4();
    FiniteAlgebra shuffled = relabeled_b4({3, 1, 2, 0});
    REQUIRE(find_isomorphism(b4, shuffled).has_value());
    for (const char* text :
         {"and(x, y) = and(y, x)", "and(x, or(x, y)) = x",
          "or(x, not(x)) = one", "not(and(x, y)) = or(not(x), not(y))"})
        CHECK(satisfies(b4, parse_identity(text, b4.sig)).holds ==
              satisfies(shuffled, parse_identity(text, b4.sig)).holds);
}

TEST_CASE("find_irregularity_witness on B2 at depth 2") {
    std::optional<Term> w = find_irregularity_witness(fixtures::b2(), 2);
    REQUIRE(w.has_value());
    std::set<std::string> vars = variables(*w);
    CHECK(vars.count("x"));
    CHECK(vars.count("y"));
    FiniteAlgebra b2 = fixtures::b2();
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            CHECK(evaluate(b2, *w, {{"x", u}, {"y", v}}) == u);
}

TEST_CASE("find_irregularity_witness on B4 at depth 1 is absent") {
    FiniteAlgebra b4 = fixtures::b4();
    CHECK_FALSE(find_irregularity_witness(b4, 1).has_value());
    // Exhaustive hand check of the only depth-1 candidates with both
    // variables.
    for (const char* text : {"and(x, y)", "and(y, x)", "or(x, y)", "or(y, x)"}) {
        Term t = parse_term(text, b4.sig);
        bool works = true;
        for (int u = 0; u < 4 && works; ++u)
            for (int v = 0; v < 4 && works; ++v)
                if (evaluate(b4, t, {{"x", u}, {"y", v}}) != u) works = false;
        CHECK_FALSE(works);
    }
}

TEST_CASE("no irregularity witness in a join-semilattice") {
    CHECK_FALSE(
        find_irregularity_witness(two_element_join_semilattice(), 3)
            .has_value());
}

TEST_CASE("witness on B4 at depth 2 re-verifies") {
    FiniteAlgebra b4 = fixtures::b4();
    std::optional<Term> w = find_irregularity_witness(b4, 2);
    REQUIRE(w.has_value());
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(evaluate(b4, *w, {{"x", u}, {"y", v}}) == u);
}
