#include "plonka/semilattice.hpp"

#include <algorithm>

namespace plonka {

Semilattice validate_semilattice(const std::vector<std::vector<int>>& join,
                                 std::vector<std::string> names) {
    const int n = static_cast<int>(join.size());
    if (n == 0) throw error("empty join table");
    for (const auto& row : join) {
        if (row.size() != static_cast<std::size_t>(n))
            throw error("join table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw error("join table entry out of range");
    }
    auto name = [&](int k) {
        return names.empty() ? std::to_string(k) : names[k];
    };
    if (!names.empty() && names.size() != static_cast<std::size_t>(n))
        throw error("name count does not match table size");

    for (int a = 0; a < n; ++a)
        if (join[a][a] != a)
            throw error("idempotence violation at " + name(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (join[a][b] != join[b][a])
                throw error("commutativity violation at (" + name(a) + ", " +
                            name(b) + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (join[a][join[b][c]] != join[join[a][b]][c])
                    throw error("associativity violation at (" + name(a) +
                                ", " + name(b) + ", " + name(c) + ")");

    Semilattice s;
    s.size_ = n;
    s.join_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.join_[a * n + b] = join[a][b];
    if (names.empty())
        for (int k = 0; k < n; ++k) s.names_.push_back(std::to_string(k));
    else
        s.names_ = std::move(names);

    for (int b = 0; b < n; ++b) {
        bool below_all = true;
        for (int x = 0; x < n && below_all; ++x)
            if (!s.leq(b, x)) below_all = false;
        if (below_all) {
            s.bottom_ = b;
            break;
        }
    }
    return s;
}

bool is_semilattice_homomorphism(const Semilattice& s, const Semilattice& t,
                                 const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(s.size()))
        throw error("map is not total on the source semilattice");
    for (int v : map)
        if (v < 0 || v >= t.size())
            throw error("map value out of target range");
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            if (map[s.join(a, b)] != t.join(map[a], map[b])) return false;
    return true;
}

std::vector<std::vector<int>> semilattice_hom_maps(const Semilattice& s,
                                                   const Semilattice& t) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(s.size(), 0);
    while (true) {
        if (is_semilattice_homomorphism(s, t, map)) out.push_back(map);
        int k = s.size() - 1;
        while (k >= 0 && ++map[k] == t.size()) map[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

std::vector<std::vector<int>> semilattice_iso_maps(const Semilattice& s,
                                                   const Semilattice& t) {
    std::vector<std::vector<int>> out;
    if (s.size() != t.size()) return out;
    std::vector<int> perm(s.size());
    for (int k = 0; k < s.size(); ++k) perm[k] = k;
    // Bijective join-preserving maps; the inverse preserves joins
    // automatically.
    do {
        if (is_semilattice_homomorphism(s, t, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace plonka
