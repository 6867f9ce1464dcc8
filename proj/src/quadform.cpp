#include "h3avg/quadform.hpp"

#include <numeric>
#include <stdexcept>

#include "h3avg/discriminant.hpp"
#include "h3avg/perm_group.hpp"   // InternalCheckError

namespace h3avg {

using i128 = __int128;

std::string QForm::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

long long form_disc(const QForm& f) {
    i128 d = static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
    return static_cast<long long>(d);
}

bool form_primitive(const QForm& f) {
    return std::gcd(std::gcd(std::llabs(f.a), std::llabs(f.b)), std::llabs(f.c)) == 1;
}

bool is_reduced_imag(const QForm& f) {
    if (f.a <= 0) return false;
    if (!(-f.a < f.b && f.b <= f.a && f.a <= f.c)) return false;
    if (f.a == f.c && f.b < 0) return false;
    return true;
}

QForm reduce_imag(QForm f) {
    long long D = form_disc(f);
    for (;;) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            long long k = (2 * f.a - 1 - f.b) / (2 * f.a);  // b + 2ka in (-a, a]
            if (f.b + 2 * k * f.a > f.a) --k;
            while (f.b + 2 * k * f.a <= -f.a) ++k;
            i128 nb = f.b + static_cast<i128>(2) * k * f.a;
            i128 nc = (nb * nb - D) / (static_cast<i128>(4) * f.a);
            f.b = static_cast<long long>(nb);
            f.c = static_cast<long long>(nc);
        }
        if (f.a > f.c) {
            f = QForm{f.c, -f.b, f.a};
            continue;
        }
        break;
    }
    if ((f.a == f.c || f.b == -f.a) && f.b < 0) f.b = -f.b;
    return f;
}

QForm principal_form_imag(long long D) {
    long long b = ((D % 2) + 2) % 2;
    return QForm{1, b, static_cast<long long>((static_cast<i128>(b) * b - D) / 4)};
}

std::vector<QForm> reduced_forms_imag(long long D) {
    if (D >= 0) throw std::invalid_argument("reduced_forms_imag: D must be negative");
    std::vector<QForm> out;
    long long n = -D;
    long long bmax = isqrt_ll(n / 3);
    for (long long b = (n % 2 == 0 ? 0 : 1); b <= bmax; b += 2) {
        long long N = (b * b + n) / 4;
        for (long long a = std::max<long long>(b, 1); a * a <= N; ++a) {
            if (N % a) continue;
            long long c = N / a;
            QForm f{a, b, c};
            if (!form_primitive(f)) continue;
            out.push_back(f);
            if (b != 0 && b != a && a != c) out.push_back(QForm{a, -b, c});
        }
    }
    // deterministic order: by a, then b
    std::sort(out.begin(), out.end(), [](const QForm& x, const QForm& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return out;
}

bool is_reduced_real(const QForm& f, long long s) {
    long long A2 = 2 * std::llabs(f.a);
    return f.b >= 1 && f.b <= s && A2 >= s - f.b + 1 && A2 <= s + f.b;
}

QForm rho_step(const QForm& f, long long D, long long s) {
    long long c2 = 2 * std::llabs(f.c);
    long long r = ((s + f.b) % c2 + c2) % c2;
    long long b2 = s - r;
    i128 nc = (static_cast<i128>(b2) * b2 - D) / (static_cast<i128>(4) * f.c);
    return QForm{f.c, b2, static_cast<long long>(nc)};
}

QForm reduce_real(QForm f, long long D, long long s) {
    auto normalize = [&](QForm g) {
        long long A2 = 2 * std::llabs(g.a);
        long long target_hi = (A2 > s) ? std::llabs(g.a) : s;
        // b ~ target_hi - ((target_hi - b) mod 2|a|), lands in (target_hi - 2|a|, target_hi]
        long long r = ((target_hi - g.b) % A2 + A2) % A2;
        i128 nb = static_cast<i128>(target_hi) - r;
        i128 nc = (nb * nb - D) / (static_cast<i128>(4) * g.a);
        g.b = static_cast<long long>(nb);
        g.c = static_cast<long long>(nc);
        return g;
    };
    f = normalize(f);
    int guard = 0;
    while (!is_reduced_real(f, s)) {
        f = normalize(QForm{f.c, -f.b, f.a});
        if (++guard > 20000)
            throw InternalCheckError("reduce_real: reduction did not terminate");
    }
    return f;
}

QForm principal_form_real(long long D, long long s) {
    // unique b = D (mod 2) in (sqrtD - 2, sqrtD)
    long long b = (s % 2 == (((D % 2) + 2) % 2)) ? s : s - 1;
    i128 c = (static_cast<i128>(b) * b - D) / 4;
    return QForm{1, b, static_cast<long long>(c)};
}

std::vector<QForm> reduced_forms_real(long long D) {
    if (D <= 0) throw std::invalid_argument("reduced_forms_real: D must be positive");
    long long s = isqrt_ll(D);
    if (s * s == D) throw std::invalid_argument("reduced_forms_real: D must not be a square");
    std::vector<QForm> out;
    for (long long b = 1; b <= s; ++b) {
        if ((D - b * b) % 4) continue;
        long long N = (D - b * b) / 4;
        for (long long A = 1; A * A <= N; ++A) {
            if (N % A) continue;
            long long C = N / A;
            if (b <= C - A) continue;   // reduction window
            if (std::gcd(std::gcd(A, b), C) != 1) continue;
            out.push_back(QForm{A, b, -C});
            out.push_back(QForm{-A, b, C});
            if (A != C) {
                out.push_back(QForm{C, b, -A});
                out.push_back(QForm{-C, b, A});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QForm& x, const QForm& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return out;
}

namespace {

// u*x + v*y = g = gcd(x,y), g >= 0
long long extgcd(long long x, long long y, long long& u, long long& v) {
    long long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (y != 0) {
        long long q = x / y;
        long long t;
        t = x - q * y; x = y; y = t;
        t = u0 - q * u1; u0 = u1; u1 = t;
        t = v0 - q * v1; v0 = v1; v1 = t;
    }
    if (x < 0) { x = -x; u0 = -u0; v0 = -v0; }
    u = u0; v = v0;
    return x;
}

} // namespace

QForm compose(const QForm& f1_in, const QForm& f2_in, long long D, long long sqrtD) {
    QForm f1 = f1_in, f2 = f2_in;
    if (f1.a <= 0 || f2.a <= 0)
        throw std::invalid_argument("compose: leading coefficients must be positive");
    if (f1.a > f2.a) std::swap(f1, f2);

    long long s = (f1.b + f2.b) / 2;
    long long n = f2.b - s;          // (b2 - b1)/2

    long long y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        long long u, v;
        d = extgcd(f2.a, f1.a, u, v);
        y1 = u;
    }
    long long x2, y2, d1;
    if (s % d == 0) {
        x2 = 0;
        y2 = -1;
        d1 = d;
    } else {
        long long u, v;
        d1 = extgcd(s, d, u, v);
        x2 = u;
        y2 = -v;
    }

    long long v1 = f1.a / d1;
    long long v2 = f2.a / d1;
    // r = (y1*y2*n - x2*c2) mod v1
    i128 rr = (static_cast<i128>(y1) * y2 % v1) * (n % v1) - static_cast<i128>(x2) * (f2.c % v1);
    long long r = static_cast<long long>(((rr % v1) + v1) % v1);

    i128 a3 = static_cast<i128>(v1) * v2;
    i128 b3 = f2.b + static_cast<i128>(2) * v2 * r;
    i128 c3 = (b3 * b3 - D) / (4 * a3);
    if ((b3 * b3 - D) % (4 * a3) != 0)
        throw InternalCheckError("compose: discriminant congruence failed");

    // bring b3 down before narrowing to 64 bits
    i128 twoa = 2 * a3;
    b3 %= twoa;
    if (b3 > a3) b3 -= twoa;
    if (b3 <= -a3) b3 += twoa;
    c3 = (b3 * b3 - D) / (4 * a3);

    QForm f3{static_cast<long long>(a3), static_cast<long long>(b3), static_cast<long long>(c3)};
    return D < 0 ? reduce_imag(f3) : reduce_real(f3, D, sqrtD);
}

QForm form_inverse(const QForm& f, long long D, long long sqrtD) {
    QForm g{f.a, -f.b, f.c};
    return D < 0 ? reduce_imag(g) : reduce_real(g, D, sqrtD);
}

QForm form_pow(QForm f, long long e, long long D, long long sqrtD) {
    QForm acc = D < 0 ? principal_form_imag(D) : principal_form_real(D, sqrtD);
    if (e < 0) {
        f = form_inverse(f, D, sqrtD);
        e = -e;
    }
    // representatives must have a > 0 for compose(); cycle forms may not
    if (D > 0 && f.a < 0) f = rho_step(f, D, sqrtD);
    while (e > 0) {
        if (e & 1) {
            acc = compose(acc, f, D, sqrtD);
            if (D > 0 && acc.a < 0) acc = rho_step(acc, D, sqrtD);
        }
        f = compose(f, f, D, sqrtD);
        if (D > 0 && f.a < 0) f = rho_step(f, D, sqrtD);
        e >>= 1;
    }
    return acc;
}

} // namespace h3avg
