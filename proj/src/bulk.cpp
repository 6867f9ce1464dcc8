#include "h3avg/bulk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "h3avg/discriminant.hpp"
#include "h3avg/lfunc.hpp"
#include "h3avg/parallel.hpp"
#include "h3avg/perm_group.hpp"   // InternalCheckError
#include "h3avg/quadform.hpp"

namespace h3avg {

namespace {

// open-addressing key->index table reused across discriminants in a segment
struct FormTable {
    std::vector<std::uint64_t> keys;
    std::vector<std::int32_t> vals;
    std::uint64_t mask = 0;

    void reset(std::size_t need) {
        std::size_t cap = 16;
        while (cap < 2 * need) cap <<= 1;
        if (cap != keys.size()) {
            keys.assign(cap, 0);
            vals.assign(cap, -1);
        } else {
            std::fill(vals.begin(), vals.end(), -1);
        }
        mask = cap - 1;
    }
    void insert(std::uint64_t k, std::int32_t v) {
        std::uint64_t i = (k * 0x9e3779b97f4a7c15ULL) & mask;
        while (vals[i] >= 0) i = (i + 1) & mask;
        keys[i] = k;
        vals[i] = v;
    }
    std::int32_t find(std::uint64_t k) const {
        std::uint64_t i = (k * 0x9e3779b97f4a7c15ULL) & mask;
        while (vals[i] >= 0) {
            if (keys[i] == k) return vals[i];
            i = (i + 1) & mask;
        }
        return -1;
    }
};

struct PackedForm {
    std::int32_t a;
    std::int32_t b;
};

int v3_of(long long h) {
    int v = 0;
    while (h % 3 == 0) { h /= 3; ++v; }
    return v;
}

// 3-torsion count from class representatives: the image of x -> x^m with
// m = h/3^v is exactly the Sylow 3-subgroup; count its cube roots of the
// identity.
template <class ClassOf, class Rep>
int sylow3_torsion(long long D, long long sqrtD, long long h, int v3, long long nclasses,
                   const ClassOf& class_of, const Rep& rep, int principal) {
    if (v3 == 0) return 1;
    if (v3 == 1) return 3;
    long long m = h;
    for (int i = 0; i < v3; ++i) m /= 3;
    long long sylow_size = 1;
    for (int i = 0; i < v3; ++i) sylow_size *= 3;

    std::vector<int> sylow;
    std::vector<char> seen(nclasses, 0);
    for (long long x = 0; x < nclasses && static_cast<long long>(sylow.size()) < sylow_size; ++x) {
        QForm p = form_pow(rep(x), m, D, sqrtD);
        int cid = class_of(p);
        if (!seen[cid]) { seen[cid] = 1; sylow.push_back(cid); }
    }
    if (static_cast<long long>(sylow.size()) != sylow_size)
        throw InternalCheckError("sylow3_torsion: power image smaller than Sylow subgroup");
    int count = 0;
    for (int s : sylow) {
        QForm r = rep(s);
        QForm cube = compose(compose(r, r, D, sqrtD), r, D, sqrtD);
        if (class_of(cube) == principal) ++count;
    }
    return count;
}

// enumerate reduced positive definite forms with -D = n in [lo, hi):
// cb(n, a, b, c) once per (a, |b|, c); mirror = (b != 0 && b != a && a != c)
template <class CB>
void scan_imag_forms(long long lo, long long hi, const DiscSegment& disc, const CB& cb) {
    long long bmax = isqrt_ll((hi - 1) / 3);
    for (long long b = 0; b <= bmax; ++b) {
        for (long long a = std::max<long long>(b, 1); 4 * a * a - b * b < hi; ++a) {
            long long cmin = std::max(a, (lo + b * b + 4 * a - 1) / (4 * a));
            long long cmax = (hi - 1 + b * b) / (4 * a);
            for (long long c = cmin; c <= cmax; ++c) {
                long long n = 4 * a * c - b * b;
                if (n < lo || n >= hi || !disc.neg(n)) continue;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                cb(n, a, b, c);
            }
        }
    }
}

// enumerate reduced indefinite forms with D in [lo, hi):
// cb(D, A, b, C) once per (A <= C, b); the four signed/swapped variants
// (±A, b, ∓C), (±C, b, ∓A) are all reduced (two when A == C)
template <class CB>
void scan_real_forms(long long lo, long long hi, const DiscSegment& disc, const CB& cb) {
    for (long long A = 1; 4 * A * A + 1 < hi; ++A) {
        for (long long C = A;; ++C) {
            long long bmin = C - A + 1;
            if (bmin * bmin + 4 * A * C >= hi) break;
            for (long long b = bmin; b * b + 4 * A * C < hi; ++b) {
                long long D = b * b + 4 * A * C;
                if (D < lo || !disc.pos(D)) continue;
                if (std::gcd(std::gcd(A, b), C) != 1) continue;
                cb(D, A, b, C);
            }
        }
    }
}

struct SegmentScratch {
    std::vector<std::int32_t> counts, offsets, fill;
    std::vector<PackedForm> forms;
    FormTable table;
    std::vector<std::int32_t> cycle_id;
    std::vector<std::int32_t> rep_of;
};

void imag_side(long long lo, long long hi, bool analytic, const DiscSegment& disc,
               SegmentScratch& sc, std::vector<BulkField>& out_fields, std::vector<Quad>& out_regs) {
    std::size_t len = hi - lo;
    sc.counts.assign(len, 0);
    scan_imag_forms(lo, hi, disc, [&](long long n, long long a, long long b, long long c) {
        sc.counts[n - lo] += (b != 0 && b != a && a != c) ? 2 : 1;
    });

    sc.offsets.assign(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) sc.offsets[i + 1] = sc.offsets[i] + sc.counts[i];
    sc.forms.resize(sc.offsets[len]);
    sc.fill.assign(sc.offsets.begin(), sc.offsets.end() - 1);
    scan_imag_forms(lo, hi, disc, [&](long long n, long long a, long long b, long long c) {
        std::size_t i = n - lo;
        sc.forms[sc.fill[i]++] = PackedForm{static_cast<std::int32_t>(a),
                                            static_cast<std::int32_t>(b)};
        if (b != 0 && b != a && a != c)
            sc.forms[sc.fill[i]++] = PackedForm{static_cast<std::int32_t>(a),
                                                static_cast<std::int32_t>(-b)};
    });

    for (long long n = lo; n < hi; ++n) {
        if (!disc.neg(n)) continue;
        std::size_t i = n - lo;
        long long D = -n;
        long long h = sc.counts[i];
        if (h <= 0)
            throw InternalCheckError("bulk imag: no reduced forms for D=" + std::to_string(D));
        BulkField f;
        f.D = D;
        f.h = h;
        f.t = disc.num_prime_divisors(n);
        f.narrow_is_wide = true;

        int v3 = v3_of(h);
        if (v3 == 0) {
            f.h3 = 1;
        } else if (v3 == 1) {
            f.h3 = 3;
        } else {
            const PackedForm* base = sc.forms.data() + sc.offsets[i];
            sc.table.reset(h);
            for (long long k = 0; k < h; ++k)
                sc.table.insert(QForm{base[k].a, base[k].b, 0}.key(), static_cast<std::int32_t>(k));
            int pidx = sc.table.find(principal_form_imag(D).key());
            if (pidx < 0)
                throw InternalCheckError("bulk imag: principal form missing");
            auto class_of = [&](const QForm& q) {
                std::int32_t idx = sc.table.find(q.key());
                if (idx < 0)
                    throw InternalCheckError("bulk imag: reduced form missing from table");
                return static_cast<int>(idx);
            };
            auto rep = [&](long long k) {
                long long a = base[k].a, b = base[k].b;
                return QForm{a, b, static_cast<long long>(
                                        (static_cast<__int128>(b) * b - D) / (4 * a))};
            };
            f.h3 = sylow3_torsion(D, 0, h, v3, h, class_of, rep, pidx);
        }

        if (analytic) {
            f.residue = 2.0 * M_PI * static_cast<double>(h) /
                        (roots_of_unity_count(D) * std::sqrt(static_cast<double>(n)));
            f.zeta2 = zeta2_const * dirichlet_L2(D);
            out_regs.push_back(Quad(0));
        }
        out_fields.push_back(f);
    }
}

void real_side(long long lo, long long hi, bool analytic, const DiscSegment& disc,
               SegmentScratch& sc, std::vector<BulkField>& out_fields, std::vector<Quad>& out_regs) {
    std::size_t len = hi - lo;
    sc.counts.assign(len, 0);
    scan_real_forms(lo, hi, disc, [&](long long D, long long A, long long, long long C) {
        sc.counts[D - lo] += (A == C) ? 2 : 4;
    });

    sc.offsets.assign(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) sc.offsets[i + 1] = sc.offsets[i] + sc.counts[i];
    sc.forms.resize(sc.offsets[len]);
    sc.fill.assign(sc.offsets.begin(), sc.offsets.end() - 1);
    scan_real_forms(lo, hi, disc, [&](long long D, long long A, long long b, long long C) {
        std::size_t i = D - lo;
        auto push = [&](long long a) {
            sc.forms[sc.fill[i]++] = PackedForm{static_cast<std::int32_t>(a),
                                                static_cast<std::int32_t>(b)};
        };
        push(A);
        push(-A);
        if (A != C) {
            push(C);
            push(-C);
        }
    });

    for (long long D = lo; D < hi; ++D) {
        if (!disc.pos(D)) continue;
        std::size_t i = D - lo;
        long long nforms = sc.counts[i];
        if (nforms <= 0)
            throw InternalCheckError("bulk real: no reduced forms for D=" + std::to_string(D));
        const PackedForm* base = sc.forms.data() + sc.offsets[i];
        long long s = isqrt_ll(D);

        sc.table.reset(nforms);
        for (long long k = 0; k < nforms; ++k)
            sc.table.insert(QForm{base[k].a, base[k].b, 0}.key(), static_cast<std::int32_t>(k));

        auto form_at = [&](long long k) {
            long long a = base[k].a, b = base[k].b;
            return QForm{a, b, static_cast<long long>(
                                    (static_cast<__int128>(b) * b - D) / (4 * a))};
        };

        sc.cycle_id.assign(nforms, -1);
        sc.rep_of.clear();
        int ncyc = 0;
        for (long long k = 0; k < nforms; ++k) {
            if (sc.cycle_id[k] >= 0) continue;
            int cid = ncyc++;
            sc.rep_of.push_back(-1);
            long long j = k;
            while (sc.cycle_id[j] < 0) {
                sc.cycle_id[j] = cid;
                if (base[j].a > 0) {
                    std::int32_t r = sc.rep_of[cid];
                    if (r < 0 || base[j].a < base[r].a ||
                        (base[j].a == base[r].a && base[j].b < base[r].b))
                        sc.rep_of[cid] = static_cast<std::int32_t>(j);
                }
                QForm nxt = rho_step(form_at(j), D, s);
                std::int32_t jj = sc.table.find(nxt.key());
                if (jj < 0)
                    throw InternalCheckError("bulk real: rho step left the reduced set, D=" +
                                             std::to_string(D));
                j = jj;
            }
            if (sc.rep_of[cid] < 0)
                throw InternalCheckError("bulk real: cycle without positive lead, D=" +
                                         std::to_string(D));
        }

        long long hplus = ncyc;
        QForm pf = principal_form_real(D, s);
        std::int32_t pform = sc.table.find(pf.key());
        if (pform < 0)
            throw InternalCheckError("bulk real: principal form missing, D=" + std::to_string(D));
        int principal = sc.cycle_id[pform];

        std::int32_t nform = sc.table.find(QForm{-1, pf.b, 0}.key());
        if (nform < 0)
            throw InternalCheckError("bulk real: (-1,b) form missing, D=" + std::to_string(D));

        BulkField f;
        f.D = D;
        f.h = hplus;
        f.t = disc.num_prime_divisors(D);
        f.narrow_is_wide = (sc.cycle_id[nform] == principal);

        int v3 = v3_of(hplus);
        if (v3 == 0) {
            f.h3 = 1;
        } else if (v3 == 1) {
            f.h3 = 3;
        } else {
            auto class_of = [&](const QForm& q) {
                QForm r = reduce_real(q, D, s);
                std::int32_t idx = sc.table.find(r.key());
                if (idx < 0)
                    throw InternalCheckError("bulk real: reduced form missing from table");
                return static_cast<int>(sc.cycle_id[idx]);
            };
            auto rep = [&](long long cid) { return form_at(sc.rep_of[cid]); };
            f.h3 = sylow3_torsion(D, s, hplus, v3, hplus, class_of, rep, principal);
        }

        if (analytic) {
            // narrow regulator: sum of log((b+sqrt D)/(2|a|)) over the principal cycle
            Quad sq = sqrt(Quad(D));
            Quad R = 0;
            for (long long k = 0; k < nforms; ++k)
                if (sc.cycle_id[k] == principal)
                    R += log((Quad(base[k].b) + sq) / Quad(2 * std::abs(base[k].a)));
            out_regs.push_back(R);
            // residue = 2 h_wide R_wide / sqrt(D) = h+ R+ / sqrt(D)
            f.residue = static_cast<double>(Quad(hplus) * R / sq);
            f.zeta2 = zeta2_const * dirichlet_L2(D);
        }
        out_fields.push_back(f);
    }
}

} // namespace

void bulk_fields(const BulkOptions& opt, const std::function<void(const BulkSegmentData&)>& consume) {
    if (opt.limit < 3)
        throw std::invalid_argument("bulk_fields: limit must be >= 3");

    // segment plan: bounded form-buffer memory, independent of thread count
    std::vector<std::pair<long long, long long>> plan;
    long long lo = 2;
    while (lo <= opt.limit) {
        double width = 4.0e6 / std::max(1.0, std::sqrt(static_cast<double>(lo)));
        long long w = std::clamp<long long>(static_cast<long long>(width), 512, 1 << 16);
        long long hi = std::min(opt.limit + 1, lo + w);
        plan.push_back({lo, hi});
        lo = hi;
    }

    std::function<BulkSegmentData(long long)> compute = [&](long long idx) {
        const auto [slo, shi] = plan[idx];
        DiscSegment disc = build_disc_segment(slo, shi);

        BulkSegmentData seg;
        seg.lo = slo;
        seg.hi = shi;

        SegmentScratch sc;
        std::vector<BulkField> neg_fields, pos_fields;
        std::vector<Quad> neg_regs, pos_regs;
        imag_side(slo, shi, opt.with_analytic, disc, sc, neg_fields, neg_regs);
        real_side(slo, shi, opt.with_analytic, disc, sc, pos_fields, pos_regs);

        // merge by (|D|, negative first)
        std::size_t ni = 0, pi = 0;
        while (ni < neg_fields.size() || pi < pos_fields.size()) {
            bool take_neg;
            if (ni == neg_fields.size()) take_neg = false;
            else if (pi == pos_fields.size()) take_neg = true;
            else take_neg = -neg_fields[ni].D <= pos_fields[pi].D;
            if (take_neg) {
                seg.fields.push_back(neg_fields[ni]);
                if (opt.with_analytic) seg.regulators.push_back(neg_regs[ni]);
                ++ni;
            } else {
                seg.fields.push_back(pos_fields[pi]);
                if (opt.with_analytic) seg.regulators.push_back(pos_regs[pi]);
                ++pi;
            }
        }
        return seg;
    };
    std::function<void(long long, BulkSegmentData&)> deliver = [&](long long, BulkSegmentData& seg) {
        consume(seg);
    };
    parallel_ordered<BulkSegmentData>(static_cast<long long>(plan.size()), opt.threads, compute, deliver);
}

int bulk_h3_single(long long D) {
    long long n = std::llabs(D);
    int h3 = -1;
    BulkOptions opt;
    opt.limit = n;
    opt.threads = 1;
    bulk_fields(opt, [&](const BulkSegmentData& seg) {
        for (const auto& f : seg.fields)
            if (f.D == D) h3 = f.h3;
    });
    if (h3 < 0)
        throw std::invalid_argument("bulk_h3_single: not a fundamental discriminant");
    return h3;
}

} // namespace h3avg
