#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plonka/error.hpp"

namespace plonka {

// Finite join-semilattice given by its join table. Construction checks
// commutativity, associativity and idempotence exhaustively and derives
// the order a <= b iff a v b = b and the bottom element when one exists.
class Semilattice {
  public:
    // Empty placeholder; every usable value comes from validate_semilattice.
    Semilattice() = default;

    int size() const { return size_; }
    int join(int a, int b) const { return join_[a * size_ + b]; }
    bool leq(int a, int b) const { return join(a, b) == b; }
    std::optional<int> bottom() const { return bottom_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(int a) const { return names_[a]; }

    bool same_join(const Semilattice& o) const {
        return size_ == o.size_ && join_ == o.join_;
    }

    friend Semilattice validate_semilattice(
        const std::vector<std::vector<int>>& join,
        std::vector<std::string> names);

  private:
    int size_ = 0;
    std::vector<int> join_;
    std::optional<int> bottom_;
    std::vector<std::string> names_;
};

// Throws plonka::error naming the first failing element/pair/triple.
// Names default to "0", "1", ...
Semilattice validate_semilattice(const std::vector<std::vector<int>>& join,
                                 std::vector<std::string> names = {});

// map(a v b) = map(a) v map(b) for all pairs. map must be total on s.
bool is_semilattice_homomorphism(const Semilattice& s, const Semilattice& t,
                                 const std::vector<int>& map);

// All homomorphisms / isomorphisms s->t in lexicographic map order.
std::vector<std::vector<int>> semilattice_hom_maps(const Semilattice& s,
                                                   const Semilattice& t);
std::vector<std::vector<int>> semilattice_iso_maps(const Semilattice& s,
                                                   const Semilattice& t);

}  // namespace plonka
