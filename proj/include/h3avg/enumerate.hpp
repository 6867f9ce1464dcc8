#ifndef H3AVG_ENUMERATE_HPP
#define H3AVG_ENUMERATE_HPP

#include <vector>

#include "h3avg/perm_group.hpp"

namespace h3avg {

// Iterated wreath product C_p wr ... wr C_p on p^k points: a Sylow
// p-subgroup of S_{p^k}.
PermGroup sylow_subgroup_of_symmetric(int p, int k);

// All subgroups of G (as element-index sets in G's element order), found by
// upward p-extension when G is a p-group, generic closure walk otherwise.
std::vector<std::vector<int>> all_subgroups(const PermGroup& G);

// sigma with sigma A sigma^{-1} = B, by exhaustive search over S_n with an
// invariant prefilter.  n <= 9.
bool are_conjugate_in_sn(const PermGroup& A, const PermGroup& B, Perm* sigma = nullptr);

// Every transitive nilpotent subgroup of S_n up to S_n-conjugacy, in a
// deterministic order (by order, then by sorted element keys).  2 <= n <= 9.
// Prime-power degrees enumerate inside one Sylow subgroup; composite degrees
// take direct products of the prime-power lists.
std::vector<PermGroup> enumerate_transitive_nilpotent(int n);

} // namespace h3avg

#endif
