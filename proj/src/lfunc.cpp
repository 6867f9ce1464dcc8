#include "h3avg/lfunc.hpp"

#include <cmath>
#include <stdexcept>

#include "h3avg/discriminant.hpp"

namespace h3avg {

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    int k = 1;
    if (v % 2 == 1) {
        long long r = ((a % 8) + 8) % 8;
        k = (r == 1 || r == 7) ? 1 : -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) { a /= 2; ++v; }
        if (v % 2 == 1) {
            long long r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if (((a % 4) + 4) % 4 == 3 && n % 4 == 3) k = -k;
        long long t = ((n % a) + std::llabs(a)) % std::llabs(a);
        n = std::llabs(a);
        a = t;
    }
    return n == 1 ? k : 0;
}

double dirichlet_L1_exact(long long D) {
    long long q = std::llabs(D);
    if (D < 0) {
        // L(1) = pi |sum a chi(a)| / q^(3/2)
        __int128 s = 0;
        for (long long a = 1; a < q; ++a) s += static_cast<__int128>(kronecker(D, a)) * a;
        long double mag = s < 0 ? static_cast<long double>(-s) : static_cast<long double>(s);
        return static_cast<double>(M_PIl * mag / (static_cast<long double>(q) * sqrtl(static_cast<long double>(q))));
    }
    // L(1) = -(1/sqrt(q)) sum chi(a) log sin(pi a / q)
    long double s = 0;
    for (long long a = 1; a < q; ++a) {
        int c = kronecker(D, a);
        if (c) s += c * logl(sinl(M_PIl * a / q));
    }
    return static_cast<double>(-s / sqrtl(static_cast<long double>(q)));
}

namespace {

// Gamma(3/2, x) = sqrt(pi)/2 erfc(sqrt(x)) + sqrt(x) e^{-x}
double gamma_3half(double x) {
    double r = std::sqrt(x);
    return 0.886226925452758014 * std::erfc(r) + r * std::exp(-x);
}

// Gamma(0, x) = E1(x) = -Ei(-x)
double gamma_zero(double x) {
    return -std::expint(-x);
}

// Gamma(-1/2, x) = 2 (e^{-x}/sqrt(x) - sqrt(pi) erfc(sqrt(x)))
double gamma_neghalf(double x) {
    double r = std::sqrt(x);
    return 2.0 * (std::exp(-x) / r - 1.772453850905516027 * std::erfc(r));
}

} // namespace

double dirichlet_L2(long long D) {
    long long q = std::llabs(D);
    // x_n = pi n^2 / q; keep terms to x_N >= 40, tail below 1e-15 relative
    long long N = isqrt_ll(static_cast<long long>(40.0 * q / M_PI)) + 2;
    const double piq = M_PI / static_cast<double>(q);
    double s1 = 0, s2 = 0;
    if (D < 0) {
        for (long long n = 1; n <= N; ++n) {
            int c = kronecker(D, n);
            if (!c) continue;
            double x = piq * n * n;
            s1 += c * gamma_3half(x) / (static_cast<double>(n) * n);
            s2 += c * n * gamma_zero(x);
        }
        // L = (2/sqrt(pi)) (s1 + (pi/q)^{3/2} s2)
        return 1.128379167095512574 * (s1 + std::pow(piq, 1.5) * s2);
    }
    for (long long n = 1; n <= N; ++n) {
        int c = kronecker(D, n);
        if (!c) continue;
        double x = piq * n * n;
        s1 += c * std::exp(-x) / (static_cast<double>(n) * n);
        s2 += c * n * gamma_neghalf(x);
    }
    return s1 + std::pow(piq, 1.5) * s2;
}

double dirichlet_L2_sin_formula(long long D) {
    if (D <= 0) throw std::invalid_argument("sin^2 formula needs an even character (D > 0)");
    long long q = D;
    long double s = 0;
    for (long long a = 1; a < q; ++a) {
        int c = kronecker(D, a);
        if (!c) continue;
        long double sn = sinl(M_PIl * a / q);
        s += c / (sn * sn);
    }
    return static_cast<double>(M_PIl * M_PIl / (2.0L * q * q) * s);
}

double zeta_F_at_2(long long D) {
    if (D == 1) return zeta2_const;
    if (!is_fundamental(D))
        throw std::invalid_argument("zeta_F_at_2: discriminant not fundamental");
    return zeta2_const * dirichlet_L2(D);
}

} // namespace h3avg
