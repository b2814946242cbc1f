#include "plonka/io.hpp"

#include <fstream>

namespace plonka::io {

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw input_error(std::string("missing field \"") + name + "\"");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer())
        throw input_error(std::string("field \"") + name +
                          "\" must be an integer");
    return v.get<int>();
}

std::vector<std::string> string_array(const json& j, const char* what) {
    if (!j.is_array())
        throw input_error(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const json& e : j) {
        if (!e.is_string())
            throw input_error(std::string(what) +
                              " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array())
        throw input_error(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const json& e : j) {
        if (!e.is_number_integer())
            throw input_error(std::string(what) +
                              " must be an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
    if (!j.is_array())
        throw input_error(std::string(what) + " must be a nested array");
    std::vector<std::vector<int>> out;
    for (const json& row : j) out.push_back(int_array(row, what));
    return out;
}

// k-ary tables are k-nested arrays indexed row-major; nullary is a bare
// index.
void flatten_table(const json& j, int arity, const std::string& op,
                   std::vector<int>& out) {
    if (arity == 0) {
        if (!j.is_number_integer())
            throw input_error("nullary table for '" + op +
                              "' must be a bare index");
        out.push_back(j.get<int>());
        return;
    }
    if (!j.is_array())
        throw input_error("table for '" + op + "' has the wrong nesting");
    for (const json& e : j) flatten_table(e, arity - 1, op, out);
}

json nest_table(const std::vector<int>& flat, int arity, int size,
                std::size_t& pos) {
    if (arity == 0) return flat[pos++];
    json arr = json::array();
    for (int k = 0; k < size; ++k)
        arr.push_back(nest_table(flat, arity - 1, size, pos));
    return arr;
}

}  // namespace

DocumentKind detect_kind(const json& j) {
    if (!j.is_object()) throw input_error("document must be a JSON object");
    if (j.contains("tables")) return DocumentKind::algebra;
    if (j.contains("fibers")) return DocumentKind::system;
    if (j.contains("objects")) return DocumentKind::inverse_system;
    if (j.contains("phi")) return DocumentKind::morphism;
    if (j.contains("identities")) return DocumentKind::identity_list;
    if (j.contains("ops")) return DocumentKind::signature;
    throw input_error("unrecognized document kind");
}

std::string kind_name(DocumentKind k) {
    switch (k) {
        case DocumentKind::signature: return "signature";
        case DocumentKind::algebra: return "algebra";
        case DocumentKind::system: return "system";
        case DocumentKind::inverse_system: return "inverse-system";
        case DocumentKind::morphism: return "morphism";
        case DocumentKind::identity_list: return "identity-list";
    }
    return "?";
}

json signature_to_json(const Signature& s) {
    json ops = json::object();
    for (const auto& [name, arity] : s.ops()) ops[name] = arity;
    return json{{"ops", ops}};
}

Signature signature_from_json(const json& j) {
    const json& ops = field(j, "ops");
    if (!ops.is_object())
        throw input_error("\"ops\" must map symbol names to arities");
    std::map<std::string, int> m;
    for (const auto& [name, arity] : ops.items()) {
        if (!arity.is_number_integer() || arity.get<int>() < 0)
            throw input_error("arity of '" + name +
                              "' must be a non-negative integer");
        m[name] = arity.get<int>();
    }
    try {
        return Signature(std::move(m));
    } catch (const error& e) {
        throw input_error(e.what());
    }
}

json algebra_to_json(const FiniteAlgebra& a) {
    json tables = json::object();
    for (const auto& [op, flat] : a.tables) {
        std::size_t pos = 0;
        tables[op] = nest_table(flat, a.sig.arity(op), a.size, pos);
    }
    json names = json::array();
    for (const std::string& n : a.names) names.push_back(n);
    return json{{"signature", signature_to_json(a.sig)},
                {"size", a.size},
                {"names", names},
                {"tables", tables}};
}

FiniteAlgebra algebra_from_json(const json& j) {
    FiniteAlgebra a;
    a.sig = signature_from_json(field(j, "signature"));
    a.size = int_field(j, "size");
    if (a.size <= 0) throw input_error("\"size\" must be positive");
    if (j.contains("names"))
        a.names = string_array(j["names"], "\"names\"");
    else
        for (int k = 0; k < a.size; ++k)
            a.names.push_back("e" + std::to_string(k));
    const json& tables = field(j, "tables");
    if (!tables.is_object()) throw input_error("\"tables\" must be an object");
    for (const auto& [op, table] : tables.items()) {
        if (!a.sig.has(op))
            throw input_error("table for undeclared operation '" + op + "'");
        std::vector<int> flat;
        flatten_table(table, a.sig.arity(op), op, flat);
        a.tables[op] = std::move(flat);
    }
    try {
        check_algebra(a);
    } catch (const error& e) {
        throw input_error(e.what());
    }
    return a;
}

json semilattice_to_json(const Semilattice& s) {
    json join = json::array();
    for (int a = 0; a < s.size(); ++a) {
        json row = json::array();
        for (int b = 0; b < s.size(); ++b) row.push_back(s.join(a, b));
        join.push_back(row);
    }
    json elements = json::array();
    for (const std::string& n : s.names()) elements.push_back(n);
    return json{{"elements", elements}, {"join", join}};
}

namespace {

void semilattice_fields(const json& j, std::vector<std::vector<int>>& join,
                        std::vector<std::string>& names) {
    const json& sl = field(j, "semilattice");
    names = string_array(field(sl, "elements"), "\"elements\"");
    join = int_matrix(field(sl, "join"), "\"join\"");
    if (join.size() != names.size())
        throw input_error("join table size does not match element count");
    for (const auto& row : join) {
        if (row.size() != names.size())
            throw input_error("join table is not square");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(names.size()))
                throw input_error("join table entry out of range");
    }
}

json transitions_to_json(
    const std::map<std::pair<int, int>, std::vector<int>>& transitions,
    bool inverse) {
    json arr = json::array();
    for (const auto& [key, map] : transitions) {
        json entry = json::object();
        // Inverse transitions map X_{i'} -> X_i, so "from" is the upper
        // index.
        entry["from"] = inverse ? key.second : key.first;
        entry["to"] = inverse ? key.first : key.second;
        json m = json::array();
        for (int v : map) m.push_back(v);
        entry["map"] = m;
        arr.push_back(entry);
    }
    return arr;
}

std::map<std::pair<int, int>, std::vector<int>> transitions_from_json(
    const json& j, int index_size, bool inverse) {
    if (!j.is_array()) throw input_error("\"transitions\" must be an array");
    std::map<std::pair<int, int>, std::vector<int>> out;
    for (const json& entry : j) {
        int from = int_field(entry, "from");
        int to = int_field(entry, "to");
        if (from < 0 || from >= index_size || to < 0 || to >= index_size)
            throw input_error("transition index out of range");
        std::vector<int> map = int_array(field(entry, "map"), "\"map\"");
        auto key = inverse ? std::pair{to, from} : std::pair{from, to};
        if (out.count(key)) throw input_error("duplicate transition");
        out[key] = std::move(map);
    }
    return out;
}

}  // namespace

json system_to_json(const DirectSystem& s) {
    json fibers = json::array();
    for (const FiniteAlgebra& f : s.fibers) fibers.push_back(algebra_to_json(f));
    return json{{"semilattice", semilattice_to_json(s.index)},
                {"fibers", fibers},
                {"transitions", transitions_to_json(s.transitions, false)}};
}

SystemCandidate system_from_json(const json& j) {
    SystemCandidate c;
    semilattice_fields(j, c.join, c.index_names);
    const json& fibers = field(j, "fibers");
    if (!fibers.is_array()) throw input_error("\"fibers\" must be an array");
    for (const json& f : fibers) c.fibers.push_back(algebra_from_json(f));
    c.transitions = transitions_from_json(
        field(j, "transitions"), static_cast<int>(c.index_names.size()),
        false);
    return c;
}

json inverse_to_json(const InverseSystem& s) {
    json objects = json::array();
    for (int k : s.objects) objects.push_back(k);
    return json{{"semilattice", semilattice_to_json(s.index)},
                {"objects", objects},
                {"transitions", transitions_to_json(s.transitions, true)}};
}

InverseCandidate inverse_from_json(const json& j) {
    InverseCandidate c;
    semilattice_fields(j, c.join, c.index_names);
    c.objects = int_array(field(j, "objects"), "\"objects\"");
    c.transitions = transitions_from_json(
        field(j, "transitions"), static_cast<int>(c.index_names.size()),
        true);
    return c;
}

json morphism_to_json(const SystemMorphism& m) {
    json phi = json::array();
    for (int v : m.phi) phi.push_back(v);
    json comps = json::array();
    for (const std::vector<int>& c : m.components) {
        json map = json::array();
        for (int v : c) map.push_back(v);
        comps.push_back(json{{"map", map}});
    }
    return json{{"phi", phi}, {"components", comps}};
}

SystemMorphism morphism_from_json(const json& j) {
    SystemMorphism m;
    m.phi = int_array(field(j, "phi"), "\"phi\"");
    const json& comps = field(j, "components");
    if (!comps.is_array())
        throw input_error("\"components\" must be an array");
    for (const json& c : comps)
        m.components.push_back(int_array(field(c, "map"), "component map"));
    return m;
}

std::vector<Identity> IdentityList::parsed() const {
    std::vector<Identity> out;
    for (const std::string& s : identities)
        out.push_back(parse_identity(s, sig));
    return out;
}

json identities_to_json(const IdentityList& l) {
    json ids = json::array();
    for (const std::string& s : l.identities) ids.push_back(s);
    return json{{"signature", signature_to_json(l.sig)}, {"identities", ids}};
}

IdentityList identities_from_json(const json& j) {
    IdentityList l;
    l.sig = signature_from_json(field(j, "signature"));
    l.identities = string_array(field(j, "identities"), "\"identities\"");
    for (const std::string& s : l.identities) parse_identity(s, l.sig);
    return l;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << dump(j);
}

}  // namespace plonka::io
