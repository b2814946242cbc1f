#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "plonka/categories.hpp"
#include "plonka/system.hpp"

namespace plonka::io {

using json = nlohmann::json;

enum class DocumentKind {
    signature,
    algebra,
    system,
    inverse_system,
    morphism,
    identity_list,
};

// Keyed on the schema's distinguishing field. Throws input_error when no
// known kind matches.
DocumentKind detect_kind(const json& j);
std::string kind_name(DocumentKind k);

json signature_to_json(const Signature& s);
Signature signature_from_json(const json& j);

json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const json& j);

json semilattice_to_json(const Semilattice& s);

// Structure-level checks only (shapes, ranges); algebraic laws are the
// validators' business.
json system_to_json(const DirectSystem& s);
SystemCandidate system_from_json(const json& j);

json inverse_to_json(const InverseSystem& s);
InverseCandidate inverse_from_json(const json& j);

json morphism_to_json(const SystemMorphism& m);
SystemMorphism morphism_from_json(const json& j);

struct IdentityList {
    Signature sig;
    std::vector<std::string> identities;  // concrete syntax, parsed on use

    std::vector<Identity> parsed() const;
};

json identities_to_json(const IdentityList& l);
IdentityList identities_from_json(const json& j);

// Canonical serialization: two-space indent, sorted keys, trailing
// newline. Write->read->write is byte-identical.
std::string dump(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace plonka::io
