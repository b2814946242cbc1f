#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plonka/signature.hpp"

namespace plonka {

// A finite algebra as one lookup table per operation symbol. Elements are
// the indices 0..size-1; names are display metadata only. A k-ary table is
// stored flat in row-major order (size^k entries, a single entry for k=0).
struct FiniteAlgebra {
    Signature sig;
    int size = 0;
    std::vector<std::string> names;
    std::map<std::string, std::vector<int>> tables;

    int apply(const std::string& op, std::span<const int> args) const;
    const std::string& name_of(int e) const { return names[e]; }
    // Structural equality ignoring display names.
    bool same_tables(const FiniteAlgebra& other) const;
};

// Structural invariants: one table per symbol with size^arity in-range
// entries, names matching the universe. Throws input_error.
void check_algebra(const FiniteAlgebra& a);

using Assignment = std::map<std::string, int>;

std::string to_string(const FiniteAlgebra& a, const Assignment& asg);

// Bottom-up term value under an assignment. Throws on unassigned
// variables or symbols foreign to a.sig.
int evaluate(const FiniteAlgebra& a, const Term& t, const Assignment& asg);

struct SatisfactionResult {
    bool holds = false;
    // Lexicographically first counterexample (variables in name order,
    // element indices in odometer order); empty when holds.
    Assignment counterexample;

    explicit operator bool() const { return holds; }
};

SatisfactionResult satisfies(const FiniteAlgebra& a, const Identity& id);

struct ElementMap {
    FiniteAlgebra source;
    FiniteAlgebra target;
    std::vector<int> map;
};

struct HomCheck {
    bool ok = false;
    std::string witness;  // violating symbol and tuple when not ok

    explicit operator bool() const { return ok; }
};

// Commutation with every table on every argument tuple, constants
// included. Throws on signature mismatch or a structurally broken map.
HomCheck is_homomorphism(const ElementMap& m);

inline constexpr int kDefaultHomSourceBound = 12;

// All homomorphisms source->target in lexicographic order of the map
// vector. Backtracking over partial maps with constant/closure
// propagation; agrees with naive |B|^|A| filtering. Throws when
// a.size exceeds the bound.
std::vector<std::vector<int>> homomorphism_maps(
    const FiniteAlgebra& a, const FiniteAlgebra& b,
    int source_size_bound = kDefaultHomSourceBound);

std::vector<ElementMap> enumerate_homomorphisms(
    const FiniteAlgebra& a, const FiniteAlgebra& b,
    int source_size_bound = kDefaultHomSourceBound);

// Bijective homomorphisms whose inverse is again a homomorphism.
std::vector<std::vector<int>> isomorphism_maps(const FiniteAlgebra& a,
                                               const FiniteAlgebra& b);

std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a,
                                           const FiniteAlgebra& b);

// First term t over variables [x, y] (canonical order) in which both
// variables occur and t(u, v) = u holds exhaustively; absent when no
// such term exists up to max_depth.
std::optional<Term> find_irregularity_witness(const FiniteAlgebra& a,
                                              int max_depth);

}  // namespace plonka
