#ifndef H3AVG_PELL_HPP
#define H3AVG_PELL_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace h3avg {

using BigInt = boost::multiprecision::cpp_int;
using Quad = boost::multiprecision::cpp_bin_float_quad;   // 113-bit mantissa

struct FundamentalUnit {
    BigInt x, y;      // minimal x,y > 0 with x^2 - D y^2 = +-4
    int norm = 1;     // sign of (x^2 - D y^2)/4
    Quad regulator;   // log((x + y sqrt(D))/2)
};

// Principal-cycle automorph with exact convergent accumulation; the regulator
// carries well over 64 fractional bits.
FundamentalUnit fundamental_unit(long long D);

// Narrow regulator log(eps+) = (norm == -1 ? 2 : 1) * regulator, computed as a
// sum of per-step logs (no big integers); used by the bulk pipeline.
Quad narrow_regulator(long long D);

} // namespace h3avg

#endif
