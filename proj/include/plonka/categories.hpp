#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plonka/system.hpp"

namespace plonka {

// Morphism data shared by both system kinds: an index map phi plus one
// component map per index of the domain of phi.
struct SystemMorphism {
    std::vector<int> phi;
    std::vector<std::vector<int>> components;

    bool operator==(const SystemMorphism&) const = default;
};

// For a direct morphism src->dst: phi maps src indices to dst indices,
// components[i] : A_i -> B_{phi(i)}, and the squares
// f_{i'} . p_{ii'} = q_{phi(i)phi(i')} . f_i commute for all i <= i'.
std::vector<std::string> validate_direct_morphism(const DirectSystem& src,
                                                  const DirectSystem& dst,
                                                  const SystemMorphism& m);

// Semilattice inverse system: finite sets X_i with backward transitions
// p_{ii'} : X_{i'} -> X_i for every strictly comparable pair i < i'.
struct InverseSystem {
    Semilattice index;
    std::vector<int> objects;  // cardinalities
    // Keyed (i, i') with i < i'; the map has |X_{i'}| entries into X_i.
    std::map<std::pair<int, int>, std::vector<int>> transitions;

    // p_{ij}(x) for i <= j, x in X_j.
    int pull(int i, int j, int x) const;
};

struct InverseCandidate {
    std::vector<std::vector<int>> join;
    std::vector<std::string> index_names;
    std::vector<int> objects;
    std::map<std::pair<int, int>, std::vector<int>> transitions;
};

struct InverseValidation {
    std::vector<std::string> violations;
    std::optional<InverseSystem> system;

    bool ok() const { return violations.empty(); }
};

// Mirrors validate_direct_system without algebra structure: transitions
// for exactly the strictly comparable pairs, composition coherence
// p_{ii'} . p_{i'i''} = p_{ii''}.
InverseValidation validate_inverse_system(const InverseCandidate& c);

InverseSystem make_inverse_system(InverseCandidate c);

InverseCandidate to_candidate(const InverseSystem& s);

// For an inverse morphism src->dst: phi maps dst indices to src indices,
// components[j] : X_{phi(j)} -> Y_j, and the squares
// f_j . p_{phi(j)phi(j')} = q_{jj'} . f_{j'} commute for all j <= j'.
std::vector<std::string> validate_inverse_morphism(const InverseSystem& src,
                                                   const InverseSystem& dst,
                                                   const SystemMorphism& m);

// h(tagged (i, a)) = (phi(i), f_i(a)) between the Plonka sums. Validates
// m first and re-verifies that the result is a homomorphism.
ElementMap sum_of_morphism(const DirectSystem& src, const DirectSystem& dst,
                           const SystemMorphism& m);

// Every source fiber's image lies inside a single destination fiber.
bool check_fibre_preservation(const std::vector<int>& h,
                              const PlonkaAlgebra& src,
                              const PlonkaAlgebra& dst);

struct FibreMap {
    enum class Status { ok, not_homomorphism, not_fibre_preserving };

    Status status = Status::ok;
    std::vector<int> phi;  // fiber -> fiber, filled when ok
    std::string detail;

    bool ok() const { return status == Status::ok; }
};

// phi_h(i) = the unique j with h(A_i) contained in B_j, verified to be a
// semilattice homomorphism. The two precondition failures are reported
// distinctly.
FibreMap fibre_map_of_hom(const ElementMap& h, const PlonkaAlgebra& src,
                          const PlonkaAlgebra& dst);

// Object part of F: decompose by the partition term.
Decomposition functor_f(const FiniteAlgebra& a, const Term& t);

// Morphism part of F: (phi_h, restrictions of h per fiber), validated.
SystemMorphism functor_f_morphism(const FiniteAlgebra& a,
                                  const Decomposition& da,
                                  const FiniteAlgebra& b,
                                  const Decomposition& db,
                                  const std::vector<int>& h);

// Object and morphism parts of G.
PlonkaAlgebra functor_g(const DirectSystem& sys);
ElementMap functor_g_morphism(const DirectSystem& src,
                              const DirectSystem& dst,
                              const SystemMorphism& m);

// m2 . m1 (apply m1 first). Data-level; callers validate endpoints.
SystemMorphism compose_direct_morphisms(const SystemMorphism& m1,
                                        const SystemMorphism& m2);
SystemMorphism compose_inverse_morphisms(const SystemMorphism& n1,
                                         const SystemMorphism& n2);

SystemMorphism identity_direct_morphism(const DirectSystem& s);
SystemMorphism identity_inverse_morphism(const InverseSystem& s);

// Index semilattice isomorphism plus per-index bijections commuting with
// all transitions.
struct SystemIso {
    std::vector<int> sigma;
    std::vector<std::vector<int>> components;
};

std::optional<SystemIso> find_system_isomorphism(const DirectSystem& a,
                                                 const DirectSystem& b);
std::optional<SystemIso> find_inverse_system_isomorphism(
    const InverseSystem& a, const InverseSystem& b);

struct RoundtripReport {
    bool ok = false;
    std::optional<SystemIso> system_iso;  // F(G(sys)) -> sys
    std::vector<int> algebra_iso;         // G(F(A)) -> A for A = G(sys)
    std::string detail;
};

// Verifies both functor round trips on a system whose fibers all satisfy
// t(x, y) = x. Failure to find either isomorphism is reported, not thrown.
RoundtripReport roundtrip_equivalence_check(const DirectSystem& sys,
                                            const Term& t);

}  // namespace plonka
