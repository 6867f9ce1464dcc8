#ifndef H3AVG_BULK_HPP
#define H3AVG_BULK_HPP

#include <functional>
#include <vector>

#include "h3avg/pell.hpp"

namespace h3avg {

// One fundamental discriminant as produced by the segmented mass sieve.
// h is the order of the form class group (narrow when D > 0); h3 its exact
// 3-torsion size; t the number of distinct primes dividing D, so the narrow
// 2-torsion is 2^(t-1).
struct BulkField {
    long long D;
    long long h;
    int h3;
    int t;
    bool narrow_is_wide;    // meaningful for D > 0 (true for D < 0)
    double residue = 0;     // analytic fields only when requested
    double zeta2 = 0;
};

struct BulkSegmentData {
    long long lo = 0, hi = 0;                 // |D| range
    std::vector<BulkField> fields;            // ordered by (|D|, negative first)
    std::vector<Quad> regulators;             // parallel to fields when analytic
};

struct BulkOptions {
    long long limit = 0;
    int threads = 0;            // 0 = hardware concurrency
    bool with_analytic = false; // residue, zeta_F(2), narrow regulator
};

// Streams segments in increasing |D| order; `consume` runs on the calling
// thread.  Segmentation depends only on |D|, so output is identical for any
// thread count.
void bulk_fields(const BulkOptions& opt, const std::function<void(const BulkSegmentData&)>& consume);

// Exact h3 of one discriminant through the same machinery (test hook).
int bulk_h3_single(long long D);

} // namespace h3avg

#endif
