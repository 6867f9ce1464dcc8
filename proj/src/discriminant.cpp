#include "h3avg/discriminant.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace h3avg {

long long isqrt_ll(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

bool squarefree_ll(long long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

} // namespace

bool is_fundamental(long long D) {
    if (D == 0 || D == 1) return false;
    long long m4 = ((D % 4) + 4) % 4;
    if (m4 == 1) return squarefree_ll(D);
    if (m4 != 0) return false;
    long long m = D / 4;
    long long mm4 = ((m % 4) + 4) % 4;
    if (mm4 != 2 && mm4 != 3) return false;
    return squarefree_ll(m);
}

// Fixed table covering every documented cap (sqrt(1e10) = 1e5); a single
// allocation keeps concurrent readers safe.
const std::vector<int>& primes_upto(int limit) {
    static constexpr int table_limit = 200000;
    static const std::vector<int> primes = [] {
        std::vector<bool> comp(table_limit + 1, false);
        std::vector<int> out;
        for (int i = 2; i <= table_limit; ++i) {
            if (!comp[i]) {
                out.push_back(i);
                for (long long j = static_cast<long long>(i) * i; j <= table_limit; j += i)
                    comp[j] = true;
            }
        }
        return out;
    }();
    if (limit > table_limit)
        throw std::invalid_argument("primes_upto: beyond table limit");
    return primes;
}

DiscSegment build_disc_segment(long long lo, long long hi) {
    DiscSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    std::size_t len = static_cast<std::size_t>(hi - lo);
    seg.flags.assign(len, 0);
    seg.omega.assign(len, 0);

    int plim = static_cast<int>(isqrt_ll(hi)) + 1;
    const auto& primes = primes_upto(plim);

    // squarefree flags and factor counts for n in [lo,hi) and for n/4
    std::vector<std::uint8_t> sqfree(len, 1);
    std::vector<long long> rem(len);
    for (std::size_t i = 0; i < len; ++i) rem[i] = lo + static_cast<long long>(i);
    if (lo == 0) { sqfree[0] = 0; if (len > 1) rem[1] = 1; }

    for (int p : primes) {
        if (static_cast<long long>(p) > plim) break;
        long long pp = static_cast<long long>(p) * p;
        for (long long j = (lo + pp - 1) / pp * pp; j < hi; j += pp) sqfree[j - lo] = 0;
        for (long long j = (lo + p - 1) / p * p; j < hi; j += p) {
            std::size_t i = j - lo;
            ++seg.omega[i];
            while (rem[i] % p == 0) rem[i] /= p;
        }
    }
    for (std::size_t i = 0; i < len; ++i)
        if (rem[i] > 1) ++seg.omega[i];

    // quarter-range squarefree flags for n = 0 mod 4
    long long qlo = lo / 4, qhi = (hi + 3) / 4 + 1;
    std::vector<std::uint8_t> qsqfree(static_cast<std::size_t>(qhi - qlo), 1);
    if (qlo == 0) qsqfree[0] = 0;
    for (int p : primes) {
        long long pp = static_cast<long long>(p) * p;
        if (pp >= qhi) break;
        for (long long j = (qlo + pp - 1) / pp * pp; j < qhi; j += pp) qsqfree[j - qlo] = 0;
    }

    for (long long n = std::max<long long>(lo, 2); n < hi; ++n) {
        std::size_t i = n - lo;
        std::uint8_t f = 0;
        switch (n % 4) {
            case 1: if (sqfree[i]) f |= 2; break;                 // D = +n
            case 3: if (sqfree[i]) f |= 1; break;                 // D = -n
            case 0: {
                long long m = n / 4;
                if (qsqfree[m - qlo]) {
                    long long r = m % 4;
                    if (r == 2 || r == 3) f |= 2;                 // D = 4m
                    if (r == 1 || r == 2) f |= 1;                 // D = -4m
                }
                break;
            }
            default: break;
        }
        seg.flags[i] = f;
    }
    return seg;
}

void for_each_fundamental(long long limit, const std::function<void(long long D)>& fn) {
    const long long step = 1 << 16;
    for (long long lo = 2; lo <= limit; lo += step) {
        long long hi = std::min(limit + 1, lo + step);
        DiscSegment seg = build_disc_segment(lo, hi);
        for (long long n = lo; n < hi; ++n) {
            if (seg.neg(n)) fn(-n);
            if (seg.pos(n)) fn(n);
        }
    }
}

std::vector<long long> fundamental_discriminants(long long limit) {
    if (limit < 3) throw std::invalid_argument("fundamental_discriminants: limit must be >= 3");
    std::vector<long long> out;
    for_each_fundamental(limit, [&](long long D) { out.push_back(D); });
    return out;
}

long long count_fundamental(long long limit) {
    long long n = 0;
    for_each_fundamental(limit, [&](long long) { ++n; });
    return n;
}

} // namespace h3avg
