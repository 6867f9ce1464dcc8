#ifndef H3AVG_PERM_GROUP_HPP
#define H3AVG_PERM_GROUP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "h3avg/perm.hpp"

namespace h3avg {

// Thrown when a post-verified internal construction fails; signals a bug,
// never bad user input.  CLI maps this to exit code 2.
class InternalCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Finite permutation group given by generators, with the full element
// closure (sorted lexicographically by image list).  Immutable once built.
class PermGroup {
public:
    static constexpr std::size_t element_cap = 1'000'000;

    PermGroup() = default;

    // BFS closure of the generators.  All generators must share one degree.
    static PermGroup generate(std::vector<Perm> gens, std::size_t cap = element_cap);

    // Generators only, no closure; enumeration-based queries throw.
    static PermGroup generators_only(std::vector<Perm> gens);

    static PermGroup trivial(int degree);
    static PermGroup cyclic(int degree);                     // regular n-cycle
    static PermGroup symmetric(int degree);                  // closure; small n only

    // A acting on rows, B on columns of an a x b grid, point (i,j) = i*b + j.
    static PermGroup direct_product(const PermGroup& A, const PermGroup& B);

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    bool has_closure() const { return !elements_.empty(); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { require_closure(); return elements_; }

    bool contains(const Perm& p) const;
    bool is_transitive() const;
    bool is_abelian() const;
    std::vector<int> orbit_of(int x) const;   // sorted

    bool same_elements(const PermGroup& other) const;

private:
    void require_closure() const {
        if (elements_.empty())
            throw std::logic_error("operation requires group closure");
    }

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;              // sorted, empty in generators-only mode
    std::vector<std::uint64_t> keys_;         // packed(), sorted, parallel lookup index
};

// C2 wr H on 2n points: blocks {2i, 2i+1}; generators are the n coordinate
// flips (2i 2i+1) plus each H-generator acting on blocks.  Closure is built
// when 2n <= 16, otherwise generators-only.
PermGroup wreath_c2(const PermGroup& H);

} // namespace h3avg

#endif
