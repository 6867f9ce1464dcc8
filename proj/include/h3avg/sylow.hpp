#ifndef H3AVG_SYLOW_HPP
#define H3AVG_SYLOW_HPP

#include <utility>
#include <vector>

#include "h3avg/perm_group.hpp"

namespace h3avg {

int orb_count(const Perm& h);

struct AInvariant {
    int value = 0;       // min over nonidentity h of n - orb(h)
    Perm witness;        // one minimizer
};
AInvariant a_invariant(const PermGroup& H);

struct PCycleWitness {
    int p = 0;           // prime
    int m = 0;           // number of p-cycles, m = a(H)/(p-1)
    Perm element;        // prime order p, all nontrivial cycles of length p
};
// Built from a minimizer h0 of n - orb: pick p | |h0| and take h0^{|h0|/p}.
PCycleWitness homogeneous_p_cycle_witness(const PermGroup& H);

// True iff for every prime p | |H| the p-power-order elements are closed
// under composition (H is then the direct product of its Sylow subgroups).
bool is_nilpotent(const PermGroup& H);

std::vector<int> prime_factors(long long n);   // distinct, ascending

// p-part of g: g^e with e = 1 mod p^a, 0 mod the coprime part of |g|.
Perm element_p_part(const Perm& g, int p);

struct SylowFactor {
    int p = 0;
    std::vector<int> points;   // orbit of the base point under H_p, ascending
    PermGroup group;           // H_p restricted to its orbit, degree = points.size()
};

struct SylowDecomposition {
    std::vector<SylowFactor> factors;        // ascending by p
    std::vector<int> relabel;                // point -> mixed-radix code over factor coords
    std::vector<std::vector<int>> coords;    // point -> per-factor coordinate

    const SylowFactor* factor_for(int p) const;
    long long coprime_part_order(int p) const;  // |H'| = prod of other factor orders
};

// Klueners-Wang style decomposition of a transitive nilpotent group into
// transitive p-groups; the relabel bijection is post-verified elementwise
// (InternalCheckError on failure).
SylowDecomposition sylow_decompose(const PermGroup& H);

struct PPartDecomposition {
    long long h_prime_order = 0;   // |H'|
    int m_p = 0;                   // m / |H'|
    bool verified = false;         // factor image is a product of m_p p-cycles
};

// h must be a nonidentity product of p-cycles in transitive nilpotent H.
PPartDecomposition p_part_decompose_element(const PermGroup& H, const Perm& h);

} // namespace h3avg

#endif
