#include "plonka/system.hpp"

#include <algorithm>
#include <set>

namespace plonka {

namespace {

template <typename F>
void for_each_tuple(int universe, int arity, F&& f) {
    std::vector<int> t(arity, 0);
    if (universe <= 0 && arity > 0) return;
    while (true) {
        if (!f(std::span<const int>(t))) return;
        int k = arity - 1;
        while (k >= 0 && ++t[k] == universe) t[k--] = 0;
        if (k < 0) return;
    }
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) {
        if (!s.empty()) s += "; ";
        s += l;
    }
    return s;
}

}  // namespace

int DirectSystem::push(int i, int j, int x) const {
    if (i == j) return x;
    return transitions.at({i, j})[x];
}

SystemCandidate to_candidate(const DirectSystem& s) {
    SystemCandidate c;
    const int n = s.index.size();
    c.join.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c.join[a][b] = s.index.join(a, b);
    c.index_names = s.index.names();
    c.fibers = s.fibers;
    c.transitions = s.transitions;
    return c;
}

SystemValidation validate_direct_system(const SystemCandidate& c) {
    SystemValidation out;
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
    if (c.fibers.size() != static_cast<std::size_t>(n)) {
        bad.push_back("system has " + std::to_string(c.fibers.size()) +
                      " fibers for " + std::to_string(n) + " indices");
        return out;
    }
    for (int i = 0; i < n; ++i) {
        try {
            check_algebra(c.fibers[i]);
        } catch (const error& e) {
            bad.push_back("fiber " + index.name_of(i) + ": " + e.what());
        }
    }
    if (!bad.empty()) return out;

    const Signature& sig = c.fibers.front().sig;
    for (int i = 1; i < n; ++i)
        if (c.fibers[i].sig != sig)
            bad.push_back("fiber " + index.name_of(i) +
                          " has a different signature");
    if (!bad.empty()) return out;

    if (!sig.has_proper_op())
        bad.push_back("signature has no operation of arity >= 1");
    if (sig.has_constants() && !index.bottom())
        bad.push_back(
            "signature has constants but the index has no lower bound");

    for (const auto& [key, map] : c.transitions) {
        auto [i, j] = key;
        std::string pair = "(" + std::to_string(i) + ", " + std::to_string(j) +
                           ")";
        if (i < 0 || i >= n || j < 0 || j >= n) {
            bad.push_back("transition " + pair + ": index out of range");
            continue;
        }
        pair = "(" + index.name_of(i) + ", " + index.name_of(j) + ")";
        if (i == j) {
            bad.push_back("transition " + pair +
                          ": identity transitions are implicit");
            continue;
        }
        if (!index.leq(i, j)) {
            bad.push_back("transition " + pair + ": pair is not comparable");
            continue;
        }
        if (map.size() != static_cast<std::size_t>(c.fibers[i].size)) {
            bad.push_back("transition " + pair + ": map has " +
                          std::to_string(map.size()) + " entries for a " +
                          std::to_string(c.fibers[i].size) +
                          "-element fiber");
            continue;
        }
        bool in_range = true;
        for (int v : map)
            if (v < 0 || v >= c.fibers[j].size) in_range = false;
        if (!in_range) {
            bad.push_back("transition " + pair + ": value out of range");
            continue;
        }
        HomCheck h = is_homomorphism(ElementMap{c.fibers[i], c.fibers[j], map});
        if (!h.ok)
            bad.push_back("transition " + pair +
                          " is not a homomorphism: " + h.witness);
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && index.leq(i, j) && !c.transitions.count({i, j}))
                bad.push_back("missing transition for comparable pair (" +
                              index.name_of(i) + ", " + index.name_of(j) +
                              ")");
    if (!bad.empty()) return out;

    DirectSystem sys{index, c.fibers, c.transitions};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (!(index.leq(i, j) && index.leq(j, k))) continue;
                for (int x = 0; x < sys.fibers[i].size; ++x)
                    if (sys.push(i, k, x) != sys.push(j, k, sys.push(i, j, x)))
                        bad.push_back(
                            "coherence failure for (" + index.name_of(i) +
                            " <= " + index.name_of(j) + " <= " +
                            index.name_of(k) + ") at element " +
                            sys.fibers[i].name_of(x));
            }
    if (!bad.empty()) return out;

    out.system = std::move(sys);
    return out;
}

DirectSystem make_direct_system(SystemCandidate c) {
    SystemValidation v = validate_direct_system(c);
    if (!v.ok())
        throw error("invalid direct system: " + join_lines(v.violations));
    return std::move(*v.system);
}

PlonkaAlgebra plonka_sum(const DirectSystem& sys) {
    SystemValidation v = validate_direct_system(to_candidate(sys));
    if (!v.ok())
        throw error("invalid direct system: " + join_lines(v.violations));

    const int n = sys.index.size();
    PlonkaAlgebra p;
    p.index = sys.index;
    p.source = sys;

    std::vector<int> offset(n, 0);
    int total = 0;
    for (int i = 0; i < n; ++i) {
        offset[i] = total;
        total += sys.fibers[i].size;
    }
    p.fiber_of.resize(total);
    p.fiber_elements.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < sys.fibers[i].size; ++x) {
            p.fiber_of[offset[i] + x] = i;
            p.fiber_elements[i].push_back(offset[i] + x);
        }

    // Fiber element names, disambiguated with @index only on collision.
    std::vector<std::string> names;
    {
        std::set<std::string> all;
        bool unique = true;
        for (int i = 0; i < n; ++i)
            for (const std::string& nm : sys.fibers[i].names)
                if (!all.insert(nm).second) unique = false;
        for (int i = 0; i < n; ++i)
            for (const std::string& nm : sys.fibers[i].names)
                names.push_back(unique ? nm
                                       : nm + "@" + sys.index.name_of(i));
    }

    FiniteAlgebra carrier;
    carrier.sig = sys.sig();
    carrier.size = total;
    carrier.names = std::move(names);

    for (const auto& [op, arity] : carrier.sig.ops()) {
        if (arity == 0) {
            int b = *sys.index.bottom();
            carrier.tables[op] = {offset[b] + sys.fibers[b].tables.at(op)[0]};
            continue;
        }
        std::vector<int> table;
        for_each_tuple(total, arity, [&](std::span<const int> t) {
            int j = p.fiber_of[t[0]];
            for (std::size_t k = 1; k < t.size(); ++k)
                j = sys.index.join(j, p.fiber_of[t[k]]);
            std::vector<int> locals(t.size());
            for (std::size_t k = 0; k < t.size(); ++k)
                locals[k] =
                    sys.push(p.fiber_of[t[k]], j, t[k] - offset[p.fiber_of[t[k]]]);
            table.push_back(offset[j] + sys.fibers[j].apply(op, locals));
            return true;
        });
        carrier.tables[op] = std::move(table);
    }
    p.carrier = std::move(carrier);
    return p;
}

PartitionFunctionReport verify_partition_function(const FiniteAlgebra& a,
                                                  const Term& t) {
    check_term(t, a.sig);
    for (const std::string& v : variables(t))
        if (v != "x" && v != "y")
            throw error("partition term may use variables x, y only, got '" +
                        v + "'");

    const int n = a.size;
    std::vector<std::vector<int>> dot(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            dot[u][v] = evaluate(a, t, {{"x", u}, {"y", v}});

    PartitionFunctionReport rep;
    auto fail = [&](int axiom, std::string witness) {
        rep.ok = false;
        rep.failed_axiom = axiom;
        rep.witness = std::move(witness);
        return rep;
    };

    for (int u = 0; u < n; ++u)
        if (dot[u][u] != u)
            return fail(1, "a = " + a.name_of(u) + ": a.a = " +
                               a.name_of(dot[u][u]));

    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (dot[u][dot[v][w]] != dot[dot[u][v]][w])
                    return fail(2, "(a, b, c) = (" + a.name_of(u) + ", " +
                                       a.name_of(v) + ", " + a.name_of(w) +
                                       ")");
                if (dot[u][dot[v][w]] != dot[u][dot[w][v]])
                    return fail(3, "(a, b, c) = (" + a.name_of(u) + ", " +
                                       a.name_of(v) + ", " + a.name_of(w) +
                                       ")");
            }

    // Axioms 4 and 5 range over every operation of arity >= 1 and every
    // argument tuple; axiom 5's right-hand side is left-associated.
    for (const auto& [op, arity] : a.sig.ops()) {
        if (arity == 0) continue;
        PartitionFunctionReport bad;
        bad.ok = true;
        for_each_tuple(n, arity, [&](std::span<const int> args) {
            for (int b = 0; b < n; ++b) {
                int lhs4 = dot[a.apply(op, args)][b];
                std::vector<int> pushed(args.size());
                for (std::size_t k = 0; k < args.size(); ++k)
                    pushed[k] = dot[args[k]][b];
                if (lhs4 != a.apply(op, pushed)) {
                    bad = PartitionFunctionReport{
                        false, 4,
                        "g = " + op + ", args = " +
                            to_string(a, [&] {
                                Assignment w;
                                for (std::size_t k = 0; k < args.size(); ++k)
                                    w["a" + std::to_string(k + 1)] = args[k];
                                w["b"] = b;
                                return w;
                            }())};
                    return false;
                }
                int lhs5 = dot[b][a.apply(op, args)];
                int rhs5 = b;
                for (int arg : args) rhs5 = dot[rhs5][arg];
                if (lhs5 != rhs5) {
                    bad = PartitionFunctionReport{
                        false, 5,
                        "g = " + op + ", args = " +
                            to_string(a, [&] {
                                Assignment w;
                                for (std::size_t k = 0; k < args.size(); ++k)
                                    w["a" + std::to_string(k + 1)] = args[k];
                                w["b"] = b;
                                return w;
                            }())};
                    return false;
                }
            }
            return true;
        });
        if (!bad.ok) return bad;
    }
    return rep;
}

namespace {

struct DotTable {
    std::vector<std::vector<int>> dot;

    int operator()(int u, int v) const { return dot[u][v]; }
};

DotTable dot_table(const FiniteAlgebra& a, const Term& t) {
    DotTable d;
    d.dot.assign(a.size, std::vector<int>(a.size));
    for (int u = 0; u < a.size; ++u)
        for (int v = 0; v < a.size; ++v)
            d.dot[u][v] = evaluate(a, t, {{"x", u}, {"y", v}});
    return d;
}

}  // namespace

Decomposition decompose(const FiniteAlgebra& a, const Term& t) {
    check_term(t, a.sig);
    const int n = a.size;
    DotTable dot = dot_table(a, t);
    auto rel = [&](int u, int v) {
        return dot(u, v) == u && dot(v, u) == v;
    };

    // The relation must be an equivalence: reflexivity is axiom 1,
    // symmetry is built into its shape, transitivity is verified.
    for (int u = 0; u < n; ++u)
        if (!rel(u, u))
            throw error("decompose: relation not reflexive at " +
                        a.name_of(u));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (rel(u, v) && rel(v, w) && !rel(u, w))
                    throw error("decompose: relation not transitive at (" +
                                a.name_of(u) + ", " + a.name_of(v) + ", " +
                                a.name_of(w) + ")");

    Decomposition d;
    d.fiber_of.assign(n, -1);
    d.local_index.assign(n, -1);
    for (int u = 0; u < n; ++u) {
        if (d.fiber_of[u] != -1) continue;
        int c = static_cast<int>(d.fiber_elements.size());
        d.fiber_elements.push_back({});
        for (int v = u; v < n; ++v)
            if (rel(u, v)) {
                d.fiber_of[v] = c;
                d.local_index[v] = static_cast<int>(d.fiber_elements[c].size());
                d.fiber_elements[c].push_back(v);
            }
    }
    const int classes = static_cast<int>(d.fiber_elements.size());

    // Each class is closed under the operations of arity >= 1.
    for (const auto& [op, arity] : a.sig.ops()) {
        if (arity == 0) continue;
        for (int c = 0; c < classes; ++c) {
            const auto& elems = d.fiber_elements[c];
            bool ok = true;
            for_each_tuple(static_cast<int>(elems.size()), arity,
                           [&](std::span<const int> pick) {
                               std::vector<int> args(pick.size());
                               for (std::size_t k = 0; k < pick.size(); ++k)
                                   args[k] = elems[pick[k]];
                               int r = a.apply(op, args);
                               if (d.fiber_of[r] != c) {
                                   ok = false;
                                   return false;
                               }
                               return true;
                           });
            if (!ok)
                throw error("decompose: component of " +
                            a.name_of(elems[0]) + " is not closed under '" +
                            op + "'");
        }
    }

    // Order on components: i <= j iff some b in A_j absorbs some a in A_i.
    std::vector<std::vector<bool>> leq(classes,
                                       std::vector<bool>(classes, false));
    for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j)
            for (int x : d.fiber_elements[i]) {
                for (int b : d.fiber_elements[j])
                    if (dot(b, x) == b) leq[i][j] = true;
                if (leq[i][j]) break;
            }
    for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j)
            if (i != j && leq[i][j] && leq[j][i])
                throw error("decompose: component order not antisymmetric");
    for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j)
            for (int k = 0; k < classes; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k])
                    throw error("decompose: component order not transitive");

    std::vector<std::vector<int>> join(classes, std::vector<int>(classes, -1));
    for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j) {
            std::vector<int> ups;
            for (int k = 0; k < classes; ++k)
                if (leq[i][k] && leq[j][k]) ups.push_back(k);
            int least = -1;
            for (int u : ups) {
                bool below_all = true;
                for (int v : ups)
                    if (!leq[u][v]) below_all = false;
                if (below_all) {
                    least = u;
                    break;
                }
            }
            if (least == -1)
                throw error("decompose: components " + std::to_string(i) +
                            " and " + std::to_string(j) + " have no join");
            join[i][j] = least;
        }

    std::vector<std::string> index_names;
    for (int c = 0; c < classes; ++c)
        index_names.push_back("[" + a.name_of(d.fiber_elements[c][0]) + "]");
    Semilattice index = [&] {
        try {
            return validate_semilattice(join, index_names);
        } catch (const error& e) {
            throw error(std::string("decompose: derived join table: ") +
                        e.what());
        }
    }();

    // Fiber algebras: restricted tables; constants are pushed from the
    // bottom component so that all transitions preserve them.
    if (a.sig.has_constants() && !index.bottom())
        throw error("decompose: constants present but no bottom component");

    // Transitions first: x -> x.b for the first b of the target component,
    // independence of the choice verified.
    std::map<std::pair<int, int>, std::vector<int>> transitions;
    for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j) {
            if (i == j || !index.leq(i, j)) continue;
            int anchor = d.fiber_elements[j][0];
            std::vector<int> map;
            for (int x : d.fiber_elements[i]) {
                int r = dot(x, anchor);
                for (int c : d.fiber_elements[j])
                    if (dot(x, c) != r)
                        throw error(
                            "decompose: transition depends on the anchor: " +
                            a.name_of(x) + "." + a.name_of(anchor) + " != " +
                            a.name_of(x) + "." + a.name_of(c));
                if (d.fiber_of[r] != j)
                    throw error("decompose: " + a.name_of(x) + "." +
                                a.name_of(anchor) +
                                " lands outside the target component");
                map.push_back(d.local_index[r]);
            }
            transitions[{i, j}] = std::move(map);
        }

    std::vector<FiniteAlgebra> fibers;
    for (int c = 0; c < classes; ++c) {
        const auto& elems = d.fiber_elements[c];
        FiniteAlgebra f;
        f.sig = a.sig;
        f.size = static_cast<int>(elems.size());
        for (int x : elems) f.names.push_back(a.name_of(x));
        for (const auto& [op, arity] : a.sig.ops()) {
            if (arity == 0) {
                int g = a.tables.at(op)[0];
                int bot = *index.bottom();
                if (d.fiber_of[g] != bot)
                    throw error("decompose: constant '" + op +
                                "' lies outside the bottom component");
                int local = d.local_index[g];
                int pushed = c == bot ? local : transitions.at({bot, c})[local];
                f.tables[op] = {pushed};
                continue;
            }
            std::vector<int> table;
            for_each_tuple(f.size, arity, [&](std::span<const int> pick) {
                std::vector<int> args(pick.size());
                for (std::size_t k = 0; k < pick.size(); ++k)
                    args[k] = elems[pick[k]];
                table.push_back(d.local_index[a.apply(op, args)]);
                return true;
            });
            f.tables[op] = std::move(table);
        }
        fibers.push_back(std::move(f));
    }

    SystemCandidate cand;
    cand.join = join;
    cand.index_names = index_names;
    cand.fibers = std::move(fibers);
    cand.transitions = std::move(transitions);
    SystemValidation v = validate_direct_system(cand);
    if (!v.ok())
        throw error("decompose: extracted system invalid: " +
                    join_lines(v.violations));
    d.system = std::move(*v.system);

    // The sum of the extracted system must be element-wise identical to
    // the input under the tagging.
    PlonkaAlgebra p = plonka_sum(d.system);
    std::vector<int> tag;  // sum element -> original element
    for (int c = 0; c < classes; ++c)
        for (int x : d.fiber_elements[c]) tag.push_back(x);
    for (const auto& [op, arity] : a.sig.ops()) {
        bool ok = true;
        for_each_tuple(p.carrier.size, arity, [&](std::span<const int> args) {
            std::vector<int> orig(args.size());
            for (std::size_t k = 0; k < args.size(); ++k)
                orig[k] = tag[args[k]];
            if (tag[p.carrier.apply(op, args)] != a.apply(op, orig)) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok)
            throw error("decompose: reconstructed sum differs from the "
                        "input on '" +
                        op + "'");
    }
    return d;
}

PlonkaAlgebra plonka_view(const FiniteAlgebra& a, const Decomposition& d) {
    PlonkaAlgebra p;
    p.carrier = a;
    p.index = d.system.index;
    p.fiber_of = d.fiber_of;
    p.fiber_elements = d.fiber_elements;
    p.source = d.system;
    return p;
}

std::vector<IdentityTransfer> identity_transfer_report(
    const DirectSystem& sys, const std::vector<Identity>& ids) {
    PlonkaAlgebra p = plonka_sum(sys);
    std::vector<IdentityTransfer> out;
    for (const Identity& id : ids) {
        IdentityTransfer r;
        r.id = id;
        r.regular = is_regular(id);
        r.fibers_satisfy = true;
        for (const FiniteAlgebra& f : sys.fibers)
            if (!satisfies(f, id).holds) {
                r.fibers_satisfy = false;
                break;
            }
        SatisfactionResult s = satisfies(p.carrier, id);
        r.sum_satisfies = s.holds;
        if (!s.holds) r.sum_counterexample = s.counterexample;
        if (sys.fibers.size() >= 2)
            r.consistent = r.sum_satisfies == (r.regular && r.fibers_satisfy);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace plonka
