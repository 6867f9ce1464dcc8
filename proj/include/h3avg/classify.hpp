#ifndef H3AVG_CLASSIFY_HPP
#define H3AVG_CLASSIFY_HPP

#include <string>

#include "h3avg/sylow.hpp"

namespace h3avg {

enum class NilpotentClass {
    TwoGroup,               // a(H) = minimal transposition count m
    ThreeGroupWith3Cycle,   // a = 2
    C3timesH2,              // a = 3, H2 a 2-group with a transposition
    C2timesH3,              // a = 4, H3 a 3-group with a 3-cycle
    ThreeGroupTwo3Cycles,   // a = 4
    FiveGroupWith5Cycle,    // a = 4
    C5timesH2,              // a = 5, H2 a 2-group with a transposition
    BeyondTable,            // a >= 6
};

const char* to_string(NilpotentClass c);

struct ClassificationResult {
    NilpotentClass tag;
    int a_value = 0;
    PCycleWitness witness;        // homogeneous p-cycle minimizer in H
    Perm factor_witness;          // transposition / 3-cycle / 5-cycle in the relevant
                                  // Sylow factor (its own degree); identity if unused
    int factor_witness_p = 0;
};

// Case table for transitive nilpotent H; structural claims are re-verified
// on the Sylow decomposition and failures raise InternalCheckError.
ClassificationResult classify_nilpotent(const PermGroup& H);

enum class CoverageRoute {
    OWW2Group,          // 2-group: C2 wr H is a 2-group containing a transposition
    OWWRemark3Group,    // a(H) = 2: 3-group case
    Theorem12,          // nilpotent, a(H) >= 3, via the Malle-type bound
    UncoveredFrontier,  // non-nilpotent: no route known
};

const char* to_string(CoverageRoute r);

struct CoverageVerdict {
    CoverageRoute route;
    bool new_in_this_paper = false;
    std::string new_form;         // "H5", "C2xH3", "C3xH2" or "C5xH2" when new
    int a_value = 0;              // predicted count exponent is 1/a_value
    bool nilpotent = false;
    std::string note;             // frontier remarks (S3, D5)
};

CoverageVerdict coverage_verdict(const PermGroup& H);

} // namespace h3avg

#endif
