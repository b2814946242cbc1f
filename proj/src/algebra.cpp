#include "plonka/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace plonka {

namespace {

std::size_t table_size(int universe, int arity) {
    std::size_t s = 1;
    for (int k = 0; k < arity; ++k) s *= static_cast<std::size_t>(universe);
    return s;
}

std::size_t flat_index(int universe, std::span<const int> args) {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(universe) +
                             static_cast<std::size_t>(a);
    return idx;
}

std::string tuple_string(const FiniteAlgebra& a, std::span<const int> args) {
    std::string s = "(";
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (k) s += ", ";
        s += a.name_of(args[k]);
    }
    return s + ")";
}

// Odometer over arity-many indices in [0, universe). f returns false to
// stop early.
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

}  // namespace

int FiniteAlgebra::apply(const std::string& op,
                         std::span<const int> args) const {
    return tables.at(op)[flat_index(size, args)];
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
    return sig == other.sig && size == other.size && tables == other.tables;
}

void check_algebra(const FiniteAlgebra& a) {
    if (a.size <= 0) throw input_error("algebra size must be positive");
    if (a.names.size() != static_cast<std::size_t>(a.size))
        throw input_error("algebra has " + std::to_string(a.names.size()) +
                          " names for " + std::to_string(a.size) +
                          " elements");
    for (const auto& [op, arity] : a.sig.ops()) {
        auto it = a.tables.find(op);
        if (it == a.tables.end())
            throw input_error("missing table for operation '" + op + "'");
        if (it->second.size() != table_size(a.size, arity))
            throw input_error("table for '" + op + "' has " +
                              std::to_string(it->second.size()) +
                              " entries, expected " +
                              std::to_string(table_size(a.size, arity)));
        for (int v : it->second)
            if (v < 0 || v >= a.size)
                throw input_error("table entry out of range for '" + op + "'");
    }
    for (const auto& [op, table] : a.tables)
        if (!a.sig.has(op))
            throw input_error("table for undeclared operation '" + op + "'");
}

std::string to_string(const FiniteAlgebra& a, const Assignment& asg) {
    std::string s;
    for (const auto& [v, e] : asg) {
        if (!s.empty()) s += ", ";
        s += v + " = " + a.name_of(e);
    }
    return s;
}

int evaluate(const FiniteAlgebra& a, const Term& t, const Assignment& asg) {
    if (t.var) {
        auto it = asg.find(t.head);
        if (it == asg.end())
            throw error("unassigned variable '" + t.head + "'");
        return it->second;
    }
    if (!a.sig.has(t.head))
        throw error("signature mismatch: no operation '" + t.head + "'");
    if (a.sig.arity(t.head) != static_cast<int>(t.args.size()))
        throw error("signature mismatch: arity of '" + t.head + "'");
    std::vector<int> vals;
    vals.reserve(t.args.size());
    for (const Term& s : t.args) vals.push_back(evaluate(a, s, asg));
    return a.apply(t.head, vals);
}

SatisfactionResult satisfies(const FiniteAlgebra& a, const Identity& id) {
    check_term(id.lhs, a.sig);
    check_term(id.rhs, a.sig);
    std::set<std::string> vs = variables(id.lhs);
    std::set<std::string> rv = variables(id.rhs);
    vs.insert(rv.begin(), rv.end());
    std::vector<std::string> vars(vs.begin(), vs.end());

    SatisfactionResult res;
    res.holds = true;
    for_each_tuple(a.size, static_cast<int>(vars.size()),
                   [&](std::span<const int> t) {
                       Assignment asg;
                       for (std::size_t k = 0; k < vars.size(); ++k)
                           asg[vars[k]] = t[k];
                       if (evaluate(a, id.lhs, asg) !=
                           evaluate(a, id.rhs, asg)) {
                           res.holds = false;
                           res.counterexample = std::move(asg);
                           return false;
                       }
                       return true;
                   });
    return res;
}

HomCheck is_homomorphism(const ElementMap& m) {
    if (m.source.sig != m.target.sig)
        throw error("signature mismatch between source and target");
    if (m.map.size() != static_cast<std::size_t>(m.source.size))
        throw error("map is not total on the source");
    for (int v : m.map)
        if (v < 0 || v >= m.target.size)
            throw error("map value out of target range");

    HomCheck res;
    res.ok = true;
    for (const auto& [op, arity] : m.source.sig.ops()) {
        for_each_tuple(m.source.size, arity, [&](std::span<const int> t) {
            std::vector<int> imgs(t.size());
            for (std::size_t k = 0; k < t.size(); ++k) imgs[k] = m.map[t[k]];
            int lhs = m.map[m.source.apply(op, t)];
            int rhs = m.target.apply(op, imgs);
            if (lhs != rhs) {
                res.ok = false;
                res.witness = op + tuple_string(m.source, t) +
                              ": image of result is " + m.target.name_of(lhs) +
                              " but target computes " + m.target.name_of(rhs);
                return false;
            }
            return true;
        });
        if (!res.ok) break;
    }
    return res;
}

namespace {

// Backtracking over partial maps. Constants and fully-assigned argument
// tuples force the image of the result element; conflicts prune the
// branch. Emission is in lexicographic order of the completed map.
class HomSearch {
  public:
    HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, bool bijective,
              std::size_t limit)
        : a_(a),
          b_(b),
          bijective_(bijective),
          limit_(limit),
          map_(a.size, -1),
          used_(b.size, false) {}

    std::vector<std::vector<int>> run() {
        std::vector<int> trail;
        if (propagate(trail)) dfs();
        return std::move(out_);
    }

  private:
    bool assign(int e, int v, std::vector<int>& trail) {
        if (map_[e] != -1) return map_[e] == v;
        if (bijective_ && used_[v]) return false;
        map_[e] = v;
        used_[v] = true;
        trail.push_back(e);
        return true;
    }

    void undo(const std::vector<int>& trail) {
        for (int e : trail) {
            used_[map_[e]] = false;
            map_[e] = -1;
        }
    }

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [op, arity] : a_.sig.ops()) {
                bool ok = true;
                for_each_tuple(a_.size, arity, [&](std::span<const int> t) {
                    std::vector<int> imgs(t.size());
                    for (std::size_t k = 0; k < t.size(); ++k) {
                        if (map_[t[k]] == -1) return true;
                        imgs[k] = map_[t[k]];
                    }
                    int r = a_.apply(op, t);
                    int v = b_.apply(op, imgs);
                    if (map_[r] == v) return true;
                    if (map_[r] == -1) {
                        if (!assign(r, v, trail)) {
                            ok = false;
                            return false;
                        }
                        changed = true;
                        return true;
                    }
                    ok = false;
                    return false;
                });
                if (!ok) return false;
            }
        }
        return true;
    }

    void dfs() {
        if (out_.size() >= limit_) return;
        int e = -1;
        for (int k = 0; k < a_.size; ++k)
            if (map_[k] == -1) {
                e = k;
                break;
            }
        if (e == -1) {
            out_.push_back(map_);
            return;
        }
        for (int v = 0; v < b_.size; ++v) {
            if (bijective_ && used_[v]) continue;
            std::vector<int> trail;
            if (assign(e, v, trail) && propagate(trail)) dfs();
            undo(trail);
            if (out_.size() >= limit_) return;
        }
    }

    const FiniteAlgebra& a_;
    const FiniteAlgebra& b_;
    bool bijective_;
    std::size_t limit_;
    std::vector<int> map_;
    std::vector<bool> used_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<std::vector<int>> homomorphism_maps(const FiniteAlgebra& a,
                                                const FiniteAlgebra& b,
                                                int source_size_bound) {
    if (a.sig != b.sig)
        throw error("signature mismatch between source and target");
    if (a.size > source_size_bound)
        throw error("source size " + std::to_string(a.size) +
                    " exceeds enumeration bound " +
                    std::to_string(source_size_bound));
    return HomSearch(a, b, false, SIZE_MAX).run();
}

std::vector<ElementMap> enumerate_homomorphisms(const FiniteAlgebra& a,
                                                const FiniteAlgebra& b,
                                                int source_size_bound) {
    std::vector<ElementMap> out;
    for (auto& m : homomorphism_maps(a, b, source_size_bound))
        out.push_back(ElementMap{a, b, std::move(m)});
    return out;
}

std::vector<std::vector<int>> isomorphism_maps(const FiniteAlgebra& a,
                                               const FiniteAlgebra& b) {
    if (a.sig != b.sig)
        throw error("signature mismatch between source and target");
    if (a.size != b.size) return {};
    std::vector<std::vector<int>> out;
    for (auto& m : HomSearch(a, b, true, SIZE_MAX).run()) {
        std::vector<int> inv(b.size);
        for (int k = 0; k < a.size; ++k) inv[m[k]] = k;
        if (is_homomorphism(ElementMap{b, a, inv}).ok)
            out.push_back(std::move(m));
    }
    return out;
}

std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a,
                                           const FiniteAlgebra& b) {
    if (a.sig != b.sig)
        throw error("signature mismatch between source and target");
    if (a.size != b.size) return std::nullopt;
    // First in enumeration order. Inverses of bijective homomorphisms are
    // homomorphisms for algebras, but the check is re-run regardless.
    for (auto& m : HomSearch(a, b, true, SIZE_MAX).run()) {
        std::vector<int> inv(b.size);
        for (int k = 0; k < a.size; ++k) inv[m[k]] = k;
        if (is_homomorphism(ElementMap{b, a, inv}).ok)
            return ElementMap{a, b, std::move(m)};
    }
    return std::nullopt;
}

std::optional<Term> find_irregularity_witness(const FiniteAlgebra& a,
                                              int max_depth) {
    if (max_depth < 1) throw error("max_depth must be >= 1");
    const std::vector<std::string> vars = {"x", "y"};
    std::vector<Term> shallower;
    for (int d = 0; d <= max_depth; ++d) {
        std::vector<Term> layer = enumerate_terms_at(a.sig, vars, d, shallower);
        for (const Term& t : layer) {
            std::set<std::string> vs = variables(t);
            if (!vs.count("x") || !vs.count("y")) continue;
            bool works = true;
            for (int u = 0; u < a.size && works; ++u)
                for (int v = 0; v < a.size && works; ++v)
                    if (evaluate(a, t, {{"x", u}, {"y", v}}) != u)
                        works = false;
            if (works) return t;
        }
        shallower.insert(shallower.end(), layer.begin(), layer.end());
    }
    return std::nullopt;
}

}  // namespace plonka
