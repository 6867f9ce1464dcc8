#include "h3avg/fielddata.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "h3avg/bulk.hpp"
#include "h3avg/discriminant.hpp"
#include "h3avg/lfunc.hpp"

namespace h3avg {

int roots_of_unity_count(long long D) {
    if (D == -3) return 6;
    if (D == -4) return 4;
    return 2;
}

QuadFieldData quad_field_data(long long D) {
    if (!is_fundamental(D))
        throw std::invalid_argument("quad_field_data: discriminant not fundamental");
    QuadFieldData out;
    out.D = D;
    ClassGroup G(D);
    out.h = G.order();
    out.invariant_factors = G.invariant_factors();
    out.h2 = 1;
    out.h3 = 1;
    for (long long d : out.invariant_factors) {
        if (d % 2 == 0) out.h2 *= 2;
        if (d % 3 == 0) out.h3 *= 3;
    }
    out.h6 = out.h2 * out.h3;
    out.w = roots_of_unity_count(D);
    out.zeta2 = zeta_F_at_2(D);

    if (D < 0) {
        out.r1 = 0;
        out.r2 = 1;
        out.h_wide = out.h;
        out.residue = 2.0 * M_PI * static_cast<double>(out.h) /
                      (out.w * std::sqrt(static_cast<double>(-D)));
    } else {
        out.r1 = 2;
        out.r2 = 0;
        out.narrow_is_wide = G.narrow_equals_wide();
        out.h_wide = G.wide_order();
        FundamentalUnit eps = fundamental_unit(D);
        if ((eps.norm == -1) != out.narrow_is_wide)
            throw InternalCheckError("quad_field_data: unit norm disagrees with cycle structure");
        out.unit_x = eps.x;
        out.unit_y = eps.y;
        out.unit_norm = eps.norm;
        out.regulator = eps.regulator;
        out.residue = static_cast<double>(2 * out.h_wide * eps.regulator /
                                          sqrt(Quad(D)));
    }
    return out;
}

long long h_torsion(long long D, int p) {
    if (p != 2 && p != 3)
        throw std::invalid_argument("h_torsion: p must be 2 or 3");
    ClassGroup G(D);
    return G.torsion_count(p);
}

TrivialBoundReport trivial_bound_check(long long T, int threads) {
    if (T < 3) throw std::invalid_argument("trivial_bound_check: T must be >= 3");
    TrivialBoundReport rep;
    BulkOptions opt;
    opt.limit = T;
    opt.threads = threads;
    bulk_fields(opt, [&](const BulkSegmentData& seg) {
        for (const auto& f : seg.fields) {
            long long hw = f.h;
            if (f.D > 0 && !f.narrow_is_wide) hw /= 2;
            double ad = static_cast<double>(std::llabs(f.D));
            double ratio = static_cast<double>(hw) / (std::sqrt(ad) * (2.0 + std::log(ad)));
            if (ratio > rep.max_ratio) {
                rep.max_ratio = ratio;
                rep.best_D = f.D;
            }
        }
    });
    return rep;
}

namespace {

long long quad_disc_of_squarefree(long long m) {
    long long r = ((m % 4) + 4) % 4;
    return r == 1 ? m : 4 * m;
}

bool squarefree_small(long long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

} // namespace

BiquadraticCheck biquadratic_disc_check(long long m, long long n) {
    if (m == n || m == 1 || n == 1 || m == 0 || n == 0)
        throw std::invalid_argument("biquadratic_disc_check: need distinct squarefree labels != 1");
    if (!squarefree_small(m) || !squarefree_small(n))
        throw std::invalid_argument("biquadratic_disc_check: inputs must be squarefree");
    long long g = std::gcd(m, n);
    long long k = (m / g) * (n / g);
    if (k == 1 || k == m || k == n)
        throw std::invalid_argument("biquadratic_disc_check: subfields are not distinct");

    BiquadraticCheck out;
    out.m = m;
    out.n = n;
    out.k = k;
    out.d1 = quad_disc_of_squarefree(m);
    out.d2 = quad_disc_of_squarefree(n);
    out.d3 = quad_disc_of_squarefree(k);
    out.disc_K = out.d1 * out.d2 * out.d3;
    if (out.disc_K < 0)
        throw InternalCheckError("biquadratic_disc_check: V4 field discriminant must be positive");
    auto ratio = [&](long long d) -> long long {
        long long dd = d * d;
        if (out.disc_K % dd != 0) return 0;
        return out.disc_K / dd;
    };
    out.ratio1 = ratio(out.d1);
    out.ratio2 = ratio(out.d2);
    out.ratio3 = ratio(out.d3);
    out.all_integral = out.ratio1 > 0 && out.ratio2 > 0 && out.ratio3 > 0;
    return out;
}

} // namespace h3avg
