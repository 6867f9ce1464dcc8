#ifndef H3AVG_FIELDDATA_HPP
#define H3AVG_FIELDDATA_HPP

#include <vector>

#include "h3avg/classgroup.hpp"
#include "h3avg/pell.hpp"

namespace h3avg {

// Everything the average/constant machinery needs for one quadratic field.
// h and invariant_factors describe the computed form class group: the ideal
// class group for D < 0, the narrow class group for D > 0 (its odd part, in
// particular h3, agrees with the ordinary class group; its h2 is the narrow
// 2-torsion, an upper bound for the wide one).
struct QuadFieldData {
    long long D = 0;
    long long h = 0;
    std::vector<long long> invariant_factors;
    long long h2 = 0, h3 = 0, h6 = 0;
    int w = 2, r1 = 0, r2 = 0;
    Quad regulator = 0;          // wide regulator log(eps); 0 when D < 0
    double residue = 0;          // Res_{s=1} zeta_F
    double zeta2 = 0;            // zeta_F(2)

    long long h_wide = 0;        // = h for D < 0
    bool narrow_is_wide = true;  // D > 0: whether a norm -1 unit exists
    BigInt unit_x, unit_y;       // D > 0: x^2 - D y^2 = +-4 minimal
    int unit_norm = 0;
};

int roots_of_unity_count(long long D);   // 6 for -3, 4 for -4, else 2

QuadFieldData quad_field_data(long long D);

long long h_torsion(long long D, int p);   // p in {2, 3}

struct TrivialBoundReport {
    long long best_D = 0;
    double max_ratio = 0;        // h / (sqrt|D| (2 + log|D|)) maximized over |D| <= T
};
TrivialBoundReport trivial_bound_check(long long T, int threads = 0);

struct BiquadraticCheck {
    long long m = 0, n = 0, k = 0;      // the three squarefree subfield labels
    long long d1 = 0, d2 = 0, d3 = 0;   // quadratic subfield discriminants
    long long disc_K = 0;               // d1 d2 d3 (conductor-discriminant)
    long long ratio1 = 0, ratio2 = 0, ratio3 = 0;   // disc_K / d_i^2
    bool all_integral = false;
};
// Desk-scale instance of Disc(K/F) = Disc(K)/Disc(F)^2 on K = Q(sqrt m, sqrt n).
BiquadraticCheck biquadratic_disc_check(long long m, long long n);

} // namespace h3avg

#endif
