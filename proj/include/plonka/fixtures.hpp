#pragma once

#include <string>
#include <vector>

#include "plonka/system.hpp"

namespace plonka::fixtures {

// Two- and four-element Boolean algebras. b4 has elements 0, a, a', 1.
FiniteAlgebra b2();
FiniteAlgebra b4();
FiniteAlgebra b4_named(const std::vector<std::string>& names);

// The two-fiber system over the chain i < j: isomorphic B4 copies with
// the transition 0->0_j, a->1_j, a'->0_j, 1->1_j.
DirectSystem ex22();

// The absorption witness x ^ (x v y).
Term tw();

// The 12-identity transfer list over the Boolean signature.
std::vector<std::string> transfer_identity_strings();
std::vector<Identity> transfer_identities();

}  // namespace plonka::fixtures
