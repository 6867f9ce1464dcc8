#ifndef H3AVG_LFUNC_HPP
#define H3AVG_LFUNC_HPP

namespace h3avg {

int kronecker(long long a, long long n);

// L(1, chi_D) by the exact finite formulas: character sum (D < 0) or
// log-sin sum (D > 0).  Oracle-grade, O(|D|) time.
double dirichlet_L1_exact(long long D);

// L(2, chi_D) by the incomplete-gamma smoothed functional equation,
// O(sqrt(|D|)) terms, truncation error below 1e-12.
double dirichlet_L2(long long D);

// Exact closed form for even characters (D > 0): pi^2/(2 q^2) * sum of
// chi(a)/sin^2(pi a/q).  Test oracle for dirichlet_L2.
double dirichlet_L2_sin_formula(long long D);

// zeta_F(2) = zeta(2) L(2, chi_D); D = 1 gives zeta(2) itself.
double zeta_F_at_2(long long D);

inline constexpr double zeta2_const = 1.6449340668482264365;   // pi^2/6
inline constexpr double zeta4_over_zeta2 = 0.6579736267392905746;

} // namespace h3avg

#endif
