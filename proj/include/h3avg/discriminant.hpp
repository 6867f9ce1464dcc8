#ifndef H3AVG_DISCRIMINANT_HPP
#define H3AVG_DISCRIMINANT_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace h3avg {

// D = 1 mod 4 squarefree, or 4m with m = 2,3 mod 4 squarefree
bool is_fundamental(long long D);

long long isqrt_ll(long long n);

const std::vector<int>& primes_upto(int limit);   // cached, thread-safe after warmup

// Per-|D| segment data for |D| in [lo, hi).
struct DiscSegment {
    long long lo = 0, hi = 0;
    std::vector<std::uint8_t> flags;   // bit0: -|D| fundamental, bit1: +|D| fundamental
    std::vector<std::uint8_t> omega;   // distinct prime divisors of |D| (fundamental slots)

    bool neg(long long n) const { return flags[n - lo] & 1; }
    bool pos(long long n) const { return flags[n - lo] & 2; }
    int num_prime_divisors(long long n) const { return omega[n - lo]; }
};

DiscSegment build_disc_segment(long long lo, long long hi);

// Every fundamental D with 1 < |D| <= limit, ordered by (|D|, sign), the
// negative discriminant first when both signs occur.
void for_each_fundamental(long long limit, const std::function<void(long long D)>& fn);

std::vector<long long> fundamental_discriminants(long long limit);

long long count_fundamental(long long limit);   // sieve-based

} // namespace h3avg

#endif
