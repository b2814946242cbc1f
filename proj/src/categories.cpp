#include "plonka/categories.hpp"

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

std::vector<int> offsets_of(const DirectSystem& s) {
    std::vector<int> off;
    int total = 0;
    for (const FiniteAlgebra& f : s.fibers) {
        off.push_back(total);
        total += f.size;
    }
    return off;
}

}  // namespace

std::vector<std::string> validate_direct_morphism(const DirectSystem& src,
                                                  const DirectSystem& dst,
                                                  const SystemMorphism& m) {
    std::vector<std::string> bad;
    const int n = src.index.size();
    if (m.phi.size() != static_cast<std::size_t>(n)) {
        bad.push_back("phi is not total on the source index");
        return bad;
    }
    for (int v : m.phi)
        if (v < 0 || v >= dst.index.size()) {
            bad.push_back("phi value out of range");
            return bad;
        }
    bool phi_ok = is_semilattice_homomorphism(src.index, dst.index, m.phi);
    if (!phi_ok) bad.push_back("phi is not a semilattice homomorphism");
    if (m.components.size() != static_cast<std::size_t>(n)) {
        bad.push_back("expected one component per source index");
        return bad;
    }
    for (int i = 0; i < n; ++i) {
        const FiniteAlgebra& ai = src.fibers[i];
        const FiniteAlgebra& bi = dst.fibers[m.phi[i]];
        const std::vector<int>& f = m.components[i];
        if (f.size() != static_cast<std::size_t>(ai.size)) {
            bad.push_back("component " + src.index.name_of(i) +
                          " is not total on its fiber");
            continue;
        }
        bool in_range = true;
        for (int v : f)
            if (v < 0 || v >= bi.size) in_range = false;
        if (!in_range) {
            bad.push_back("component " + src.index.name_of(i) +
                          " does not map into the fiber at " +
                          dst.index.name_of(m.phi[i]));
            continue;
        }
        HomCheck h = is_homomorphism(ElementMap{ai, bi, f});
        if (!h.ok)
            bad.push_back("component " + src.index.name_of(i) +
                          " is not a homomorphism: " + h.witness);
    }
    if (!bad.empty() || !phi_ok) return bad;

    // Squares: f_{i'} . p_{ii'} = q_{phi(i)phi(i')} . f_i. phi being a
    // semilattice homomorphism makes phi(i) <= phi(i') here.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !src.index.leq(i, j)) continue;
            for (int x = 0; x < src.fibers[i].size; ++x) {
                int over = m.components[j][src.push(i, j, x)];
                int down = dst.push(m.phi[i], m.phi[j], m.components[i][x]);
                if (over != down) {
                    bad.push_back(
                        "square (" + src.index.name_of(i) + " <= " +
                        src.index.name_of(j) + ") does not commute at " +
                        src.fibers[i].name_of(x));
                    break;
                }
            }
        }
    return bad;
}

int InverseSystem::pull(int i, int j, int x) const {
    if (i == j) return x;
    return transitions.at({i, j})[x];
}

InverseCandidate to_candidate(const InverseSystem& s) {
    InverseCandidate c;
    const int n = s.index.size();
    c.join.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c.join[a][b] = s.index.join(a, b);
    c.index_names = s.index.names();
    c.objects = s.objects;
    c.transitions = s.transitions;
    return c;
}

InverseValidation validate_inverse_system(const InverseCandidate& c) {
    InverseValidation out;
    auto& bad = out.violations;

    Semilattice index = [&]() -> Semilattice {
        try {
            return validate_semilattice(c.join, c.index_names);
        } catch (const error& e) {
            bad.push_back(std::string("index semilattice: ") + e.what());
            return validate_semilattice({{0}});
        }
    }();
    if (!bad.empty()) return out;

    const int n = index.size();
    if (c.objects.size() != static_cast<std::size_t>(n)) {
        bad.push_back("system has " + std::to_string(c.objects.size()) +
                      " objects for " + std::to_string(n) + " indices");
        return out;
    }
    for (int k : c.objects)
        if (k <= 0) bad.push_back("object cardinalities must be positive");
    if (!bad.empty()) return out;

    for (const auto& [key, map] : c.transitions) {
        auto [i, j] = key;
        if (i < 0 || i >= n || j < 0 || j >= n) {
            bad.push_back("transition index out of range");
            continue;
        }
        std::string pair =
            "(" + index.name_of(i) + ", " + index.name_of(j) + ")";
        if (i == j) {
            bad.push_back("transition " + pair +
                          ": identity transitions are implicit");
            continue;
        }
        if (!index.leq(i, j)) {
            bad.push_back("transition " + pair + ": pair is not comparable");
            continue;
        }
        // p_{ij} maps X_j into X_i.
        if (map.size() != static_cast<std::size_t>(c.objects[j])) {
            bad.push_back("transition " + pair + ": map has " +
                          std::to_string(map.size()) + " entries for a " +
                          std::to_string(c.objects[j]) + "-point object");
            continue;
        }
        for (int v : map)
            if (v < 0 || v >= c.objects[i]) {
                bad.push_back("transition " + pair + ": value out of range");
                break;
            }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && index.leq(i, j) && !c.transitions.count({i, j}))
                bad.push_back("missing transition for comparable pair (" +
                              index.name_of(i) + ", " + index.name_of(j) +
                              ")");
    if (!bad.empty()) return out;

    InverseSystem sys{index, c.objects, c.transitions};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (!(index.leq(i, j) && index.leq(j, k))) continue;
                for (int x = 0; x < sys.objects[k]; ++x)
                    if (sys.pull(i, k, x) != sys.pull(i, j, sys.pull(j, k, x)))
                        bad.push_back(
                            "composition failure for (" + index.name_of(i) +
                            " <= " + index.name_of(j) + " <= " +
                            index.name_of(k) + ") at point " +
                            std::to_string(x));
            }
    if (!bad.empty()) return out;

    out.system = std::move(sys);
    return out;
}

InverseSystem make_inverse_system(InverseCandidate c) {
    InverseValidation v = validate_inverse_system(c);
    if (!v.ok())
        throw error("invalid inverse system: " + join_lines(v.violations));
    return std::move(*v.system);
}

std::vector<std::string> validate_inverse_morphism(const InverseSystem& src,
                                                   const InverseSystem& dst,
                                                   const SystemMorphism& m) {
    std::vector<std::string> bad;
    const int n = dst.index.size();
    // phi maps dst indices to src indices; components are indexed by dst.
    if (m.phi.size() != static_cast<std::size_t>(n)) {
        bad.push_back("phi is not total on the target index");
        return bad;
    }
    for (int v : m.phi)
        if (v < 0 || v >= src.index.size()) {
            bad.push_back("phi value out of range");
            return bad;
        }
    bool phi_ok = is_semilattice_homomorphism(dst.index, src.index, m.phi);
    if (!phi_ok) bad.push_back("phi is not a semilattice homomorphism");
    if (m.components.size() != static_cast<std::size_t>(n)) {
        bad.push_back("expected one component per target index");
        return bad;
    }
    for (int j = 0; j < n; ++j) {
        const std::vector<int>& f = m.components[j];
        if (f.size() != static_cast<std::size_t>(src.objects[m.phi[j]])) {
            bad.push_back("component " + dst.index.name_of(j) +
                          " is not total on X_phi(" + dst.index.name_of(j) +
                          ")");
            continue;
        }
        for (int v : f)
            if (v < 0 || v >= dst.objects[j]) {
                bad.push_back("component " + dst.index.name_of(j) +
                              " value out of range");
                break;
            }
    }
    if (!bad.empty()) return bad;

    // Squares: f_j . p_{phi(j)phi(j')} = q_{jj'} . f_{j'}.
    for (int j = 0; j < n; ++j)
        for (int j2 = 0; j2 < n; ++j2) {
            if (j == j2 || !dst.index.leq(j, j2)) continue;
            for (int x = 0; x < src.objects[m.phi[j2]]; ++x) {
                int left = m.components[j][src.pull(m.phi[j], m.phi[j2], x)];
                int right = dst.pull(j, j2, m.components[j2][x]);
                if (left != right) {
                    bad.push_back("square (" + dst.index.name_of(j) + " <= " +
                                  dst.index.name_of(j2) +
                                  ") does not commute at point " +
                                  std::to_string(x));
                    break;
                }
            }
        }
    return bad;
}

ElementMap sum_of_morphism(const DirectSystem& src, const DirectSystem& dst,
                           const SystemMorphism& m) {
    std::vector<std::string> bad = validate_direct_morphism(src, dst, m);
    if (!bad.empty())
        throw error("invalid system morphism: " + join_lines(bad));

    PlonkaAlgebra ps = plonka_sum(src);
    PlonkaAlgebra pd = plonka_sum(dst);
    std::vector<int> src_off = offsets_of(src);
    std::vector<int> dst_off = offsets_of(dst);

    std::vector<int> h(ps.carrier.size);
    for (int e = 0; e < ps.carrier.size; ++e) {
        int i = ps.fiber_of[e];
        h[e] = dst_off[m.phi[i]] + m.components[i][e - src_off[i]];
    }
    ElementMap out{ps.carrier, pd.carrier, std::move(h)};
    HomCheck check = is_homomorphism(out);
    if (!check.ok)
        throw error("sum of a valid morphism failed the homomorphism "
                    "re-check: " +
                    check.witness);
    return out;
}

bool check_fibre_preservation(const std::vector<int>& h,
                              const PlonkaAlgebra& src,
                              const PlonkaAlgebra& dst) {
    for (const std::vector<int>& elems : src.fiber_elements) {
        int target = dst.fiber_of[h[elems[0]]];
        for (int e : elems)
            if (dst.fiber_of[h[e]] != target) return false;
    }
    return true;
}

FibreMap fibre_map_of_hom(const ElementMap& h, const PlonkaAlgebra& src,
                          const PlonkaAlgebra& dst) {
    FibreMap out;
    HomCheck hc = is_homomorphism(h);
    if (!hc.ok) {
        out.status = FibreMap::Status::not_homomorphism;
        out.detail = "not a homomorphism: " + hc.witness;
        return out;
    }
    if (!check_fibre_preservation(h.map, src, dst)) {
        out.status = FibreMap::Status::not_fibre_preserving;
        out.detail = "does not preserve the fibres";
        return out;
    }
    for (const std::vector<int>& elems : src.fiber_elements)
        out.phi.push_back(dst.fiber_of[h.map[elems[0]]]);
    if (!is_semilattice_homomorphism(src.index, dst.index, out.phi))
        throw error("fibre map of a fibre-preserving homomorphism is not a "
                    "semilattice homomorphism");
    return out;
}

Decomposition functor_f(const FiniteAlgebra& a, const Term& t) {
    return decompose(a, t);
}

SystemMorphism functor_f_morphism(const FiniteAlgebra& a,
                                  const Decomposition& da,
                                  const FiniteAlgebra& b,
                                  const Decomposition& db,
                                  const std::vector<int>& h) {
    PlonkaAlgebra va = plonka_view(a, da);
    PlonkaAlgebra vb = plonka_view(b, db);
    FibreMap fm = fibre_map_of_hom(ElementMap{a, b, h}, va, vb);
    if (!fm.ok()) throw error("functor F on a morphism: " + fm.detail);

    SystemMorphism m;
    m.phi = fm.phi;
    for (std::size_t i = 0; i < da.fiber_elements.size(); ++i) {
        std::vector<int> comp;
        for (int e : da.fiber_elements[i])
            comp.push_back(db.local_index[h[e]]);
        m.components.push_back(std::move(comp));
    }
    std::vector<std::string> bad =
        validate_direct_morphism(da.system, db.system, m);
    if (!bad.empty())
        throw error("functor F produced an invalid morphism: " +
                    join_lines(bad));
    return m;
}

PlonkaAlgebra functor_g(const DirectSystem& sys) { return plonka_sum(sys); }

ElementMap functor_g_morphism(const DirectSystem& src,
                              const DirectSystem& dst,
                              const SystemMorphism& m) {
    return sum_of_morphism(src, dst, m);
}

SystemMorphism compose_direct_morphisms(const SystemMorphism& m1,
                                        const SystemMorphism& m2) {
    SystemMorphism out;
    for (std::size_t i = 0; i < m1.phi.size(); ++i) {
        out.phi.push_back(m2.phi[m1.phi[i]]);
        const std::vector<int>& f1 = m1.components[i];
        const std::vector<int>& f2 = m2.components[m1.phi[i]];
        std::vector<int> comp(f1.size());
        for (std::size_t x = 0; x < f1.size(); ++x) comp[x] = f2[f1[x]];
        out.components.push_back(std::move(comp));
    }
    return out;
}

SystemMorphism compose_inverse_morphisms(const SystemMorphism& n1,
                                         const SystemMorphism& n2) {
    SystemMorphism out;
    for (std::size_t k = 0; k < n2.phi.size(); ++k) {
        out.phi.push_back(n1.phi[n2.phi[k]]);
        const std::vector<int>& f1 = n1.components[n2.phi[k]];
        const std::vector<int>& f2 = n2.components[k];
        std::vector<int> comp(f1.size());
        for (std::size_t x = 0; x < f1.size(); ++x) comp[x] = f2[f1[x]];
        out.components.push_back(std::move(comp));
    }
    return out;
}

SystemMorphism identity_direct_morphism(const DirectSystem& s) {
    SystemMorphism m;
    for (int i = 0; i < s.index.size(); ++i) {
        m.phi.push_back(i);
        std::vector<int> comp(s.fibers[i].size);
        for (int x = 0; x < s.fibers[i].size; ++x) comp[x] = x;
        m.components.push_back(std::move(comp));
    }
    return m;
}

SystemMorphism identity_inverse_morphism(const InverseSystem& s) {
    SystemMorphism m;
    for (int i = 0; i < s.index.size(); ++i) {
        m.phi.push_back(i);
        std::vector<int> comp(s.objects[i]);
        for (int x = 0; x < s.objects[i]; ++x) comp[x] = x;
        m.components.push_back(std::move(comp));
    }
    return m;
}

namespace {

// Backtracking over index isomorphisms and per-fiber candidate
// bijections, checking the transition squares among chosen components.
template <typename CandidatesFn, typename SquareFn>
std::optional<SystemIso> system_iso_search(const Semilattice& ia,
                                           const Semilattice& ib,
                                           CandidatesFn&& candidates,
                                           SquareFn&& square_ok) {
    for (const std::vector<int>& sigma : semilattice_iso_maps(ia, ib)) {
        const int n = ia.size();
        std::vector<std::vector<std::vector<int>>> cand(n);
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            cand[i] = candidates(i, sigma[i]);
            if (cand[i].empty()) feasible = false;
        }
        if (!feasible) continue;

        std::vector<std::vector<int>> chosen(n);
        auto dfs = [&](auto&& self, int i) -> bool {
            if (i == n) return true;
            for (const std::vector<int>& theta : cand[i]) {
                chosen[i] = theta;
                bool ok = true;
                for (int p = 0; p < i && ok; ++p) {
                    if (ia.leq(p, i) && p != i)
                        ok = square_ok(p, i, sigma, chosen[p], theta);
                    if (ok && ia.leq(i, p) && p != i)
                        ok = square_ok(i, p, sigma, theta, chosen[p]);
                }
                if (ok && self(self, i + 1)) return true;
            }
            chosen[i].clear();
            return false;
        };
        if (dfs(dfs, 0)) return SystemIso{sigma, chosen};
    }
    return std::nullopt;
}

std::vector<std::vector<int>> all_bijections(int n) {
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

std::optional<SystemIso> find_system_isomorphism(const DirectSystem& a,
                                                 const DirectSystem& b) {
    if (a.index.size() != b.index.size()) return std::nullopt;
    return system_iso_search(
        a.index, b.index,
        [&](int i, int si) { return isomorphism_maps(a.fibers[i], b.fibers[si]); },
        [&](int p, int q, const std::vector<int>& sigma,
            const std::vector<int>& theta_p, const std::vector<int>& theta_q) {
            // theta_q . f_{pq} = g_{sigma(p)sigma(q)} . theta_p
            for (int x = 0; x < a.fibers[p].size; ++x)
                if (theta_q[a.push(p, q, x)] !=
                    b.push(sigma[p], sigma[q], theta_p[x]))
                    return false;
            return true;
        });
}

std::optional<SystemIso> find_inverse_system_isomorphism(
    const InverseSystem& a, const InverseSystem& b) {
    if (a.index.size() != b.index.size()) return std::nullopt;
    return system_iso_search(
        a.index, b.index,
        [&](int i, int si) -> std::vector<std::vector<int>> {
            if (a.objects[i] != b.objects[si]) return {};
            return all_bijections(a.objects[i]);
        },
        [&](int p, int q, const std::vector<int>& sigma,
            const std::vector<int>& theta_p, const std::vector<int>& theta_q) {
            // theta_p . p_{pq} = q_{sigma(p)sigma(q)} . theta_q
            for (int x = 0; x < a.objects[q]; ++x)
                if (theta_p[a.pull(p, q, x)] !=
                    b.pull(sigma[p], sigma[q], theta_q[x]))
                    return false;
            return true;
        });
}

RoundtripReport roundtrip_equivalence_check(const DirectSystem& sys,
                                            const Term& t) {
    RoundtripReport rep;
    Identity witness{t, Term::variable("x")};
    for (std::size_t i = 0; i < sys.fibers.size(); ++i)
        if (!satisfies(sys.fibers[i], witness).holds) {
            rep.detail = "fiber " + sys.index.name_of(static_cast<int>(i)) +
                         " does not satisfy " + to_string(witness);
            return rep;
        }

    PlonkaAlgebra p = plonka_sum(sys);
    PartitionFunctionReport pf = verify_partition_function(p.carrier, t);
    if (!pf.ok) {
        rep.detail = "witness term is not a partition function on the sum: "
                     "axiom " +
                     std::to_string(pf.failed_axiom) + ", " + pf.witness;
        return rep;
    }

    Decomposition d = decompose(p.carrier, t);
    rep.system_iso = find_system_isomorphism(d.system, sys);
    if (!rep.system_iso) {
        rep.detail = "F(G(sys)) is not isomorphic to sys";
        return rep;
    }

    PlonkaAlgebra p2 = plonka_sum(d.system);
    std::optional<ElementMap> iso = find_isomorphism(p2.carrier, p.carrier);
    if (!iso) {
        rep.detail = "G(F(A)) is not isomorphic to A";
        return rep;
    }
    rep.algebra_iso = iso->map;
    rep.ok = true;
    return rep;
}

}  // namespace plonka
