#pragma once

#include <cstdint>
#include <vector>

#include "plonka/categories.hpp"
#include "plonka/system.hpp"

namespace plonka {

// Every n x n join table that validates as a semilattice with a bottom
// element, in lexicographic table order. Intended for small n (<= 3).
std::vector<std::vector<std::vector<int>>> semilattice_catalog_with_bottom(
    int n);

// Deterministic in seed: a random semilattice with bottom from the
// catalog, Boolean-algebra fibers of the given size with randomly
// permuted element labels, transitions sampled from the homomorphism
// enumeration along covers and composed for the remaining comparable
// pairs. The result always validates. fiber_size in {2, 4, 8},
// fiber_count <= 3.
DirectSystem gen_random_system(std::uint64_t seed, int fiber_count,
                               int fiber_size);

// Deterministic in seed: a validated morphism src -> dst found by
// backtracking over index maps and square-compatible components in
// seed-shuffled order.
SystemMorphism gen_random_morphism(std::uint64_t seed,
                                   const DirectSystem& src,
                                   const DirectSystem& dst);

}  // namespace plonka
