#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plonka/categories.hpp"

namespace plonka {

// {and:2, or:2, not:1, zero:0, one:0}
const Signature& boolean_signature();

struct BooleanAlgebraCheck {
    bool verdict = false;
    std::string failing_identity;
    Assignment counterexample;

    explicit operator bool() const { return verdict; }
};

// Exhaustive check of the Boolean axiom list (commutativity,
// associativity, absorption, distributivity, complementation). Throws on
// signature mismatch.
BooleanAlgebraCheck validate_boolean_algebra(const FiniteAlgebra& a);

// Minimal nonzero elements in the order x <= y iff x^y = x, ascending by
// element index. Requires a Boolean algebra; throws when the atom count
// is not log2 of the size.
std::vector<int> atoms(const FiniteAlgebra& a);

// Dual of a Boolean homomorphism: each atom b of the target maps to the
// unique atom a of the source with b <= h(a). Returned as positions into
// atoms(target) -> positions into atoms(source). Throws when existence
// or uniqueness fails.
std::vector<int> dualize_boolean_hom(const ElementMap& h);

// Algebra of all subsets of a set of the given size; element index =
// subset bitmask over point indices.
FiniteAlgebra primal_powerset_algebra(int points);

// Dual of a function g : X -> Y (g[x] in [0, codomain_points)):
// the inverse-image homomorphism P(Y) -> P(X), verified.
ElementMap primal_of_function(const std::vector<int>& g, int codomain_points);

// Same index semilattice; X_i = atoms(A_i); transitions dualized with
// direction reversed. All fibers must be Boolean.
InverseSystem dualize_direct_system(const DirectSystem& sys);

// (phi, f_i) -> (phi, dualized components), a morphism from
// dualize(dst) to dualize(src). Validated.
SystemMorphism dualize_direct_morphism(const DirectSystem& src,
                                       const DirectSystem& dst,
                                       const SystemMorphism& m);

// Same index; fibers are powerset algebras, transitions the primal
// homomorphisms (direction reverses back). Validated.
DirectSystem primalize_inverse_system(const InverseSystem& inv);

struct DualityReport {
    bool ok = false;
    std::optional<SystemIso> direct_iso;   // primalize(dualize(sys)) -> sys
    std::optional<SystemIso> inverse_iso;  // dualize(primalize(inv)) -> inv
    std::string detail;
};

// Round trips of the lifted duality on a Boolean-fiber system.
DualityReport duality_roundtrip_check(const DirectSystem& sys);

// dual(m2 . m1) = dual(m1) . dual(m2) for composable m1 : a -> b,
// m2 : b -> c, compared componentwise.
bool check_dual_contravariance(const DirectSystem& a, const DirectSystem& b,
                               const DirectSystem& c, const SystemMorphism& m1,
                               const SystemMorphism& m2);

}  // namespace plonka
