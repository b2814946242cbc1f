#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plonka/algebra.hpp"
#include "plonka/semilattice.hpp"

namespace plonka {

// Semilattice direct system of algebras: fibers indexed by a join
// semilattice with forward transition homomorphisms f_{ij} for every
// strictly comparable pair i < j. Identity transitions are implicit and
// never stored.
struct DirectSystem {
    Semilattice index;
    std::vector<FiniteAlgebra> fibers;
    std::map<std::pair<int, int>, std::vector<int>> transitions;

    const Signature& sig() const { return fibers.front().sig; }
    // f_{ij}(x); i == j is the identity.
    int push(int i, int j, int x) const;
};

// Unvalidated input shape for validate_direct_system.
struct SystemCandidate {
    std::vector<std::vector<int>> join;
    std::vector<std::string> index_names;
    std::vector<FiniteAlgebra> fibers;
    std::map<std::pair<int, int>, std::vector<int>> transitions;
};

struct SystemValidation {
    std::vector<std::string> violations;  // all of them, not just the first
    std::optional<DirectSystem> system;   // present when violations empty

    bool ok() const { return violations.empty(); }
};

// Exhaustive check of every system invariant: transitions are
// homomorphisms, coherence f_{ik} = f_{jk} . f_{ij}, transitions exactly
// for the strictly comparable pairs, a bottom index when the signature
// has constants.
SystemValidation validate_direct_system(const SystemCandidate& c);

// validate + throw plonka::error listing the violations.
DirectSystem make_direct_system(SystemCandidate c);

SystemCandidate to_candidate(const DirectSystem& s);

// The Plonka sum together with its fiber tagging. Carrier elements are
// ordered fibers-in-index-order, elements-in-fiber-order.
struct PlonkaAlgebra {
    FiniteAlgebra carrier;
    Semilattice index;
    std::vector<int> fiber_of;                     // element -> fiber
    std::vector<std::vector<int>> fiber_elements;  // fiber -> elements
    std::optional<DirectSystem> source;

    int fiber_count() const { return index.size(); }
};

// Each n-ary (n>=1) entry is computed by pushing all arguments to the
// join fiber; constants are interpreted in the bottom fiber.
PlonkaAlgebra plonka_sum(const DirectSystem& sys);

struct PartitionFunctionReport {
    bool ok = true;
    int failed_axiom = 0;  // 1..5 when not ok
    std::string witness;

    explicit operator bool() const { return ok; }
};

// Checks the five partition-function axioms for a.b := t(a, b)
// exhaustively; axioms 4 and 5 range over every symbol of arity >= 1 and
// every argument tuple, axiom 5's right side left-associated. Reports the
// first violated axiom with witnesses. t may use variables x, y only.
PartitionFunctionReport verify_partition_function(const FiniteAlgebra& a,
                                                  const Term& t);

// Fiber partition of an algebra by a verified partition function,
// together with the tagging between the original universe and the sum of
// the extracted system.
struct Decomposition {
    DirectSystem system;
    std::vector<int> fiber_of;     // original element -> fiber
    std::vector<int> local_index;  // original element -> index within fiber
    std::vector<std::vector<int>> fiber_elements;
};

// Partitions a by the equivalence a~b iff a.b = a and b.a = b, derives
// the index semilattice from the order i <= j iff some b in A_j absorbs
// A_i, builds transitions x -> x.b with anchor-independence verified, and
// checks the sum of the result is element-wise identical to a under the
// tagging. Throws plonka::error with witnesses when any step fails (all
// of which mean t is not a partition function on a).
Decomposition decompose(const FiniteAlgebra& a, const Term& t);

// View an algebra as a Plonka algebra through a decomposition of it.
PlonkaAlgebra plonka_view(const FiniteAlgebra& a, const Decomposition& d);

struct IdentityTransfer {
    Identity id;
    bool regular = false;
    bool fibers_satisfy = false;
    bool sum_satisfies = false;
    // sum_satisfies <=> (regular && fibers_satisfy); empty when the system
    // has fewer than two fibers.
    std::optional<bool> consistent;
    Assignment sum_counterexample;
};

std::vector<IdentityTransfer> identity_transfer_report(
    const DirectSystem& sys, const std::vector<Identity>& ids);

}  // namespace plonka
