#include "h3avg/pell.hpp"

#include <stdexcept>

#include "h3avg/discriminant.hpp"
#include "h3avg/perm_group.hpp"   // InternalCheckError
#include "h3avg/quadform.hpp"

namespace h3avg {

namespace mp = boost::multiprecision;

namespace {

// walk the principal cycle once, accumulating the SL2 word; returns (t, u)
// of the fundamental automorph: t^2 - D u^2 = 4, eps+ = (t + u sqrt(D))/2
void principal_automorph(long long D, BigInt& t, BigInt& u) {
    long long s = isqrt_ll(D);
    QForm f0 = principal_form_real(D, s);
    // accumulated matrix M = [[m00, m01], [m10, m11]], product of [[0,-1],[1,m]]
    BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    QForm f = f0;
    long long guard = 0;
    do {
        QForm g = rho_step(f, D, s);
        long long denom = 2 * f.c;
        long long m = (f.b + g.b) / denom;   // rho transformation parameter
        if (static_cast<__int128>(m) * denom != f.b + g.b)
            throw InternalCheckError("principal_automorph: non-integral rho parameter");
        // right-multiply by [[0,-1],[1,m]]
        BigInt n00 = m01, n01 = -m00 + m * m01;
        BigInt n10 = m11, n11 = -m10 + m * m11;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
        f = g;
        if (++guard > 100'000'000)
            throw InternalCheckError("principal_automorph: cycle walk did not close");
    } while (!(f == f0));
    t = m00 + m11;
    u = m10;            // = gamma / a0 with a0 = 1
    if (t < 0) { t = -t; u = -u; }
    if (u < 0)
        throw InternalCheckError("principal_automorph: negative u");
    if (t * t - D * u * u != 4)
        throw InternalCheckError("principal_automorph: automorph norm != 4");
}

Quad log_big(const BigInt& v) {
    // log of a positive big integer without overflow: shift into ~120 bits
    if (v <= 0) throw std::invalid_argument("log_big: nonpositive");
    unsigned bits = static_cast<unsigned>(mp::msb(v)) + 1;
    if (bits <= 120) return log(static_cast<Quad>(v));
    unsigned shift = bits - 120;
    BigInt top = v >> shift;
    return log(static_cast<Quad>(top)) + static_cast<Quad>(shift) * log(Quad(2));
}

// log((x + y sqrt(D))/2) in quad precision, safe for huge x, y
Quad log_unit(const BigInt& x, const BigInt& y, long long D) {
    // x + y sqrt(D) = x * (1 + r), r = y sqrt(D) / x ~ 1
    Quad r;
    unsigned xb = static_cast<unsigned>(mp::msb(x)) + 1;
    if (xb <= 120) {
        r = static_cast<Quad>(y) * sqrt(Quad(D)) / static_cast<Quad>(x);
    } else {
        unsigned shift = xb - 120;
        r = static_cast<Quad>(y >> shift) * sqrt(Quad(D)) / static_cast<Quad>(x >> shift);
    }
    return log_big(x) + log(Quad(1) + r) - log(Quad(2));
}

bool perfect_square_big(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = sqrt(v);
    return root * root == v;
}

} // namespace

FundamentalUnit fundamental_unit(long long D) {
    if (D <= 0 || !is_fundamental(D))
        throw std::invalid_argument("fundamental_unit: D must be a positive fundamental discriminant");
    BigInt t, u;
    principal_automorph(D, t, u);

    FundamentalUnit out;
    // norm -1 case: eps+ = eps^2 with eps = (x + y sqrt(D))/2, x^2 = t - 2
    BigInt x, y;
    if (perfect_square_big(t - 2, x) && (t + 2) % D == 0 && perfect_square_big((t + 2) / D, y) &&
        x > 0 && y > 0 && x * x - D * y * y == -4) {
        out.x = x;
        out.y = y;
        out.norm = -1;
    } else {
        out.x = t;
        out.y = u;
        out.norm = 1;
    }
    out.regulator = log_unit(out.x, out.y, D);
    return out;
}

Quad narrow_regulator(long long D) {
    long long s = isqrt_ll(D);
    QForm f0 = principal_form_real(D, s);
    Quad sq = sqrt(Quad(D));
    Quad sum = 0;
    QForm f = f0;
    long long guard = 0;
    do {
        // per-step multiplier (b + sqrt(D)) / (2|a|)
        sum += log((Quad(f.b) + sq) / Quad(2 * std::llabs(f.a)));
        f = rho_step(f, D, s);
        if (++guard > 100'000'000)
            throw InternalCheckError("narrow_regulator: cycle walk did not close");
    } while (!(f == f0));
    return sum;
}

} // namespace h3avg
