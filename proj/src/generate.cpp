#include "plonka/generate.hpp"

#include <algorithm>
#include <random>

#include "plonka/fixtures.hpp"
#include "plonka/stone.hpp"

namespace plonka {

namespace {

// mt19937_64 output is pinned by the standard, so reductions below stay
// byte-identical across platforms. Distributions are avoided on purpose.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next() { return engine(); }

    int below(int n) { return static_cast<int>(next() % n); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int k = static_cast<int>(v.size()) - 1; k > 0; --k)
            std::swap(v[k], v[below(k + 1)]);
    }
};

int log2_of(int n) {
    int p = 0;
    while ((1 << p) < n) ++p;
    return p;
}

// Relabel an algebra's structure by a permutation of element indices.
FiniteAlgebra permuted(const FiniteAlgebra& a, const std::vector<int>& perm) {
    FiniteAlgebra out;
    out.sig = a.sig;
    out.size = a.size;
    out.names = a.names;  // names stay positional
    for (const auto& [op, flat] : a.tables) {
        int arity = a.sig.arity(op);
        std::vector<int> table(flat.size());
        std::vector<int> t(arity, 0);
        std::size_t src = 0;
        while (true) {
            std::size_t dst = 0;
            for (int k = 0; k < arity; ++k)
                dst = dst * a.size + perm[t[k]];
            table[dst] = perm[flat[src]];
            ++src;
            int k = arity - 1;
            while (k >= 0 && ++t[k] == a.size) t[k--] = 0;
            if (k < 0) break;
        }
        out.tables[op] = std::move(table);
    }
    return out;
}

std::vector<std::pair<int, int>> cover_pairs(const Semilattice& s) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j) {
            if (i == j || !s.leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < s.size(); ++k)
                if (k != i && k != j && s.leq(i, k) && s.leq(k, j))
                    cover = false;
            if (cover) covers.push_back({i, j});
        }
    return covers;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> semilattice_catalog_with_bottom(
    int n) {
    if (n < 1 || n > 3) throw error("catalog supports sizes 1..3");
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
    while (true) {
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) table[a][b] = flat[a * n + b];
        try {
            Semilattice s = validate_semilattice(table);
            if (s.bottom()) out.push_back(std::move(table));
        } catch (const error&) {
        }
        int k = static_cast<int>(flat.size()) - 1;
        while (k >= 0 && ++flat[k] == n) flat[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

DirectSystem gen_random_system(std::uint64_t seed, int fiber_count,
                               int fiber_size) {
    if (fiber_count < 1 || fiber_count > 3)
        throw error("fiber_count must be in 1..3");
    if (fiber_size != 2 && fiber_size != 4 && fiber_size != 8)
        throw error("fiber_size must be 2, 4 or 8");
    Rng rng(seed);

    const auto catalog = semilattice_catalog_with_bottom(fiber_count);
    std::vector<std::vector<int>> join =
        catalog[rng.below(static_cast<int>(catalog.size()))];

    SystemCandidate c;
    c.join = join;
    for (int i = 0; i < fiber_count; ++i)
        c.index_names.push_back("i" + std::to_string(i));

    FiniteAlgebra base = primal_powerset_algebra(log2_of(fiber_size));
    for (int i = 0; i < fiber_count; ++i) {
        std::vector<int> perm(fiber_size);
        for (int k = 0; k < fiber_size; ++k) perm[k] = k;
        rng.shuffle(perm);
        FiniteAlgebra f = permuted(base, perm);
        f.names.clear();
        for (int k = 0; k < fiber_size; ++k)
            f.names.push_back("a" + std::to_string(i) + "_" +
                              std::to_string(k));
        c.fibers.push_back(std::move(f));
    }

    Semilattice index = validate_semilattice(join, c.index_names);
    for (auto [i, j] : cover_pairs(index)) {
        std::vector<std::vector<int>> homs =
            homomorphism_maps(c.fibers[i], c.fibers[j]);
        c.transitions[{i, j}] = homs[rng.below(static_cast<int>(homs.size()))];
    }
    // Remaining comparable pairs are composites along covers; with the
    // catalog's indices (chains) the path is unique.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < fiber_count; ++i)
            for (int j = 0; j < fiber_count; ++j) {
                if (i == j || !index.leq(i, j) || c.transitions.count({i, j}))
                    continue;
                for (int k = 0; k < fiber_count; ++k) {
                    if (k == i || k == j) continue;
                    if (!c.transitions.count({i, k}) ||
                        !c.transitions.count({k, j}))
                        continue;
                    const auto& first = c.transitions[{i, k}];
                    const auto& second = c.transitions[{k, j}];
                    std::vector<int> composite(first.size());
                    for (std::size_t x = 0; x < first.size(); ++x)
                        composite[x] = second[first[x]];
                    c.transitions[{i, j}] = std::move(composite);
                    grew = true;
                    break;
                }
            }
    }
    return make_direct_system(std::move(c));
}

SystemMorphism gen_random_morphism(std::uint64_t seed,
                                   const DirectSystem& src,
                                   const DirectSystem& dst) {
    Rng rng(seed);
    std::vector<std::vector<int>> phis =
        semilattice_hom_maps(src.index, dst.index);
    rng.shuffle(phis);

    const int n = src.index.size();
    for (const std::vector<int>& phi : phis) {
        std::vector<std::vector<std::vector<int>>> candidates(n);
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            candidates[i] =
                homomorphism_maps(src.fibers[i], dst.fibers[phi[i]]);
            rng.shuffle(candidates[i]);
            if (candidates[i].empty()) feasible = false;
        }
        if (!feasible) continue;

        std::vector<std::vector<int>> chosen(n);
        auto square_ok = [&](int p, int q) {
            for (int x = 0; x < src.fibers[p].size; ++x)
                if (chosen[q][src.push(p, q, x)] !=
                    dst.push(phi[p], phi[q], chosen[p][x]))
                    return false;
            return true;
        };
        auto dfs = [&](auto&& self, int i) -> bool {
            if (i == n) return true;
            for (const std::vector<int>& f : candidates[i]) {
                chosen[i] = f;
                bool ok = true;
                for (int p = 0; p < i && ok; ++p) {
                    if (src.index.leq(p, i)) ok = square_ok(p, i);
                    if (ok && src.index.leq(i, p)) ok = square_ok(i, p);
                }
                if (ok && self(self, i + 1)) return true;
            }
            return false;
        };
        if (!dfs(dfs, 0)) continue;

        SystemMorphism m{phi, chosen};
        std::vector<std::string> bad = validate_direct_morphism(src, dst, m);
        if (!bad.empty())
            throw error("generated morphism failed validation: " + bad[0]);
        return m;
    }
    throw error("no morphism exists between the given systems");
}

}  // namespace plonka
