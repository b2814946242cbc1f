#include "plonka/stone.hpp"

#include <algorithm>

namespace plonka {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) {
        if (!s.empty()) s += "; ";
        s += l;
    }
    return s;
}

const std::vector<std::pair<std::string, std::string>>& boolean_axioms() {
    static const std::vector<std::pair<std::string, std::string>> axioms = {
        {"commutativity of and", "and(x, y) = and(y, x)"},
        {"commutativity of or", "or(x, y) = or(y, x)"},
        {"associativity of and", "and(and(x, y), z) = and(x, and(y, z))"},
        {"associativity of or", "or(or(x, y), z) = or(x, or(y, z))"},
        {"absorption", "and(x, or(x, y)) = x"},
        {"absorption", "or(x, and(x, y)) = x"},
        {"distributivity", "and(x, or(y, z)) = or(and(x, y), and(x, z))"},
        {"distributivity", "or(x, and(y, z)) = and(or(x, y), or(x, z))"},
        {"complementation", "and(x, not(x)) = zero"},
        {"complementation", "or(x, not(x)) = one"},
    };
    return axioms;
}

}  // namespace

const Signature& boolean_signature() {
    static const Signature sig(std::map<std::string, int>{
        {"and", 2}, {"or", 2}, {"not", 1}, {"zero", 0}, {"one", 0}});
    return sig;
}

BooleanAlgebraCheck validate_boolean_algebra(const FiniteAlgebra& a) {
    if (a.sig != boolean_signature())
        throw error("signature mismatch: expected the Boolean signature");
    BooleanAlgebraCheck out;
    out.verdict = true;
    for (const auto& [label, text] : boolean_axioms()) {
        Identity id = parse_identity(text, a.sig);
        SatisfactionResult r = satisfies(a, id);
        if (!r.holds) {
            out.verdict = false;
            out.failing_identity = label + ": " + text;
            out.counterexample = r.counterexample;
            break;
        }
    }
    return out;
}

std::vector<int> atoms(const FiniteAlgebra& a) {
    auto leq = [&](int x, int y) {
        return a.apply("and", std::vector<int>{x, y}) == x;
    };
    const int zero = a.tables.at("zero")[0];
    std::vector<int> out;
    for (int u = 0; u < a.size; ++u) {
        if (u == zero) continue;
        bool minimal = true;
        for (int v = 0; v < a.size && minimal; ++v)
            if (v != zero && v != u && leq(v, u)) minimal = false;
        if (minimal) out.push_back(u);
    }
    int expected = -1;
    for (int p = 0; p < 30; ++p)
        if ((1 << p) == a.size) {
            expected = p;
            break;
        }
    if (expected < 0 || static_cast<int>(out.size()) != expected)
        throw error("atom count mismatch: " + std::to_string(out.size()) +
                    " atoms in a " + std::to_string(a.size) +
                    "-element algebra");
    return out;
}

std::vector<int> dualize_boolean_hom(const ElementMap& h) {
    HomCheck hc = is_homomorphism(h);
    if (!hc.ok) throw error("not a homomorphism: " + hc.witness);
    std::vector<int> src_atoms = atoms(h.source);
    std::vector<int> dst_atoms = atoms(h.target);
    auto leq = [&](int x, int y) {
        return h.target.apply("and", std::vector<int>{x, y}) == x;
    };
    std::vector<int> out;
    for (int beta : dst_atoms) {
        int found = -1;
        for (std::size_t k = 0; k < src_atoms.size(); ++k) {
            if (!leq(beta, h.map[src_atoms[k]])) continue;
            if (found != -1)
                throw error("atom " + h.target.name_of(beta) +
                            " lies under two images of atoms");
            found = static_cast<int>(k);
        }
        if (found == -1)
            throw error("atom " + h.target.name_of(beta) +
                        " lies under no image of an atom");
        out.push_back(found);
    }
    return out;
}

FiniteAlgebra primal_powerset_algebra(int points) {
    if (points < 0) throw error("negative point count");
    const int n = 1 << points;
    const int full = n - 1;
    FiniteAlgebra a;
    a.sig = boolean_signature();
    a.size = n;
    for (int mask = 0; mask < n; ++mask) {
        std::string name = "{";
        bool first = true;
        for (int p = 0; p < points; ++p)
            if (mask & (1 << p)) {
                if (!first) name += ",";
                name += std::to_string(p);
                first = false;
            }
        a.names.push_back(name + "}");
    }
    std::vector<int> tand, tor, tnot;
    for (int x = 0; x < n; ++x) {
        tnot.push_back(full & ~x);
        for (int y = 0; y < n; ++y) {
            tand.push_back(x & y);
            tor.push_back(x | y);
        }
    }
    a.tables["and"] = std::move(tand);
    a.tables["or"] = std::move(tor);
    a.tables["not"] = std::move(tnot);
    a.tables["zero"] = {0};
    a.tables["one"] = {full};
    return a;
}

ElementMap primal_of_function(const std::vector<int>& g, int codomain_points) {
    const int domain_points = static_cast<int>(g.size());
    for (int v : g)
        if (v < 0 || v >= codomain_points)
            throw error("function value out of range");
    FiniteAlgebra source = primal_powerset_algebra(codomain_points);
    FiniteAlgebra target = primal_powerset_algebra(domain_points);
    std::vector<int> map;
    for (int s = 0; s < source.size; ++s) {
        int preimage = 0;
        for (int x = 0; x < domain_points; ++x)
            if (s & (1 << g[x])) preimage |= 1 << x;
        map.push_back(preimage);
    }
    ElementMap out{std::move(source), std::move(target), std::move(map)};
    HomCheck hc = is_homomorphism(out);
    if (!hc.ok)
        throw error("inverse-image map failed the homomorphism check: " +
                    hc.witness);
    return out;
}

InverseSystem dualize_direct_system(const DirectSystem& sys) {
    SystemValidation sv = validate_direct_system(to_candidate(sys));
    if (!sv.ok())
        throw error("invalid direct system: " + join_lines(sv.violations));
    for (std::size_t i = 0; i < sys.fibers.size(); ++i) {
        BooleanAlgebraCheck c = validate_boolean_algebra(sys.fibers[i]);
        if (!c.verdict)
            throw error("fiber " + sys.index.name_of(static_cast<int>(i)) +
                        " is not a Boolean algebra (" + c.failing_identity +
                        ")");
    }

    InverseCandidate c;
    c.index_names = sys.index.names();
    const int n = sys.index.size();
    c.join.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c.join[a][b] = sys.index.join(a, b);
    for (const FiniteAlgebra& f : sys.fibers)
        c.objects.push_back(static_cast<int>(atoms(f).size()));
    for (const auto& [key, map] : sys.transitions) {
        auto [i, j] = key;
        c.transitions[{i, j}] = dualize_boolean_hom(
            ElementMap{sys.fibers[i], sys.fibers[j], map});
    }
    return make_inverse_system(std::move(c));
}

SystemMorphism dualize_direct_morphism(const DirectSystem& src,
                                       const DirectSystem& dst,
                                       const SystemMorphism& m) {
    std::vector<std::string> bad = validate_direct_morphism(src, dst, m);
    if (!bad.empty())
        throw error("invalid system morphism: " + join_lines(bad));

    SystemMorphism dual;
    dual.phi = m.phi;
    for (std::size_t i = 0; i < m.components.size(); ++i)
        dual.components.push_back(dualize_boolean_hom(ElementMap{
            src.fibers[i], dst.fibers[m.phi[i]], m.components[i]}));

    InverseSystem dual_src = dualize_direct_system(dst);
    InverseSystem dual_dst = dualize_direct_system(src);
    std::vector<std::string> check =
        validate_inverse_morphism(dual_src, dual_dst, dual);
    if (!check.empty())
        throw error("dualized morphism failed validation: " +
                    join_lines(check));
    return dual;
}

DirectSystem primalize_inverse_system(const InverseSystem& inv) {
    InverseValidation iv = validate_inverse_system(to_candidate(inv));
    if (!iv.ok())
        throw error("invalid inverse system: " + join_lines(iv.violations));

    SystemCandidate c;
    c.index_names = inv.index.names();
    const int n = inv.index.size();
    c.join.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c.join[a][b] = inv.index.join(a, b);
    for (int k : inv.objects) c.fibers.push_back(primal_powerset_algebra(k));
    for (const auto& [key, map] : inv.transitions) {
        auto [i, j] = key;
        c.transitions[{i, j}] =
            primal_of_function(map, inv.objects[i]).map;
    }
    return make_direct_system(std::move(c));
}

DualityReport duality_roundtrip_check(const DirectSystem& sys) {
    DualityReport rep;
    InverseSystem inv = dualize_direct_system(sys);
    DirectSystem back = primalize_inverse_system(inv);
    rep.direct_iso = find_system_isomorphism(back, sys);
    if (!rep.direct_iso) {
        rep.detail = "primalize(dualize(sys)) is not isomorphic to sys";
        return rep;
    }
    InverseSystem inv2 = dualize_direct_system(back);
    rep.inverse_iso = find_inverse_system_isomorphism(inv2, inv);
    if (!rep.inverse_iso) {
        rep.detail = "dualize(primalize(inv)) is not isomorphic to inv";
        return rep;
    }
    rep.ok = true;
    return rep;
}

bool check_dual_contravariance(const DirectSystem& a, const DirectSystem& b,
                               const DirectSystem& c, const SystemMorphism& m1,
                               const SystemMorphism& m2) {
    SystemMorphism composite = compose_direct_morphisms(m1, m2);
    SystemMorphism lhs = dualize_direct_morphism(a, c, composite);
    SystemMorphism d2 = dualize_direct_morphism(b, c, m2);
    SystemMorphism d1 = dualize_direct_morphism(a, b, m1);
    SystemMorphism rhs = compose_inverse_morphisms(d2, d1);
    return lhs == rhs;
}

}  // namespace plonka
