#include "h3avg/classgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "h3avg/discriminant.hpp"
#include "h3avg/perm_group.hpp"   // InternalCheckError
#include "h3avg/sylow.hpp"        // prime_factors

namespace h3avg {

ClassGroup::ClassGroup(long long D) : D_(D) {
    if (!is_fundamental(D))
        throw std::invalid_argument("ClassGroup: discriminant not fundamental");
    if (D > 0) sqrtD_ = isqrt_ll(D);

    forms_ = D < 0 ? reduced_forms_imag(D) : reduced_forms_real(D);
    index_.reserve(forms_.size() * 2);
    for (std::size_t i = 0; i < forms_.size(); ++i) index_[forms_[i].key()] = static_cast<int>(i);

    if (D < 0) {
        // one class per reduced form
        h_ = static_cast<long long>(forms_.size());
        cls_of_form_.resize(forms_.size());
        for (std::size_t i = 0; i < forms_.size(); ++i) cls_of_form_[i] = static_cast<int>(i);
        reps_ = forms_;
        principal_ = lookup_reduced(principal_form_imag(D));
    } else {
        // classes = rho-cycles
        cls_of_form_.assign(forms_.size(), -1);
        int ncls = 0;
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            if (cls_of_form_[i] >= 0) continue;
            int cid = ncls++;
            std::vector<int> cyc;
            int j = static_cast<int>(i);
            while (cls_of_form_[j] < 0) {
                cls_of_form_[j] = cid;
                cyc.push_back(j);
                j = lookup_reduced(rho_step(forms_[j], D_, sqrtD_));
            }
            if (j != static_cast<int>(i) && cls_of_form_[j] != cid)
                throw InternalCheckError("ClassGroup: rho walk merged into another cycle");
            // canonical representative: first form with a > 0 in deterministic order
            QForm best{0, 0, 0};
            for (int k : cyc)
                if (forms_[k].a > 0 && (best.a == 0 || forms_[k].a < best.a ||
                                        (forms_[k].a == best.a && forms_[k].b < best.b)))
                    best = forms_[k];
            reps_.push_back(best);
            int pidx = lookup_reduced(principal_form_real(D_, sqrtD_));
            if (cls_of_form_[pidx] == cid && principal_cycle_.empty()) principal_cycle_ = cyc;
        }
        h_ = ncls;
        principal_ = cls_of_form_[lookup_reduced(principal_form_real(D_, sqrtD_))];
    }
}

int ClassGroup::lookup_reduced(const QForm& f) const {
    auto it = index_.find(f.key());
    if (it == index_.end())
        throw InternalCheckError("ClassGroup: reduced form missing from table for D=" +
                                 std::to_string(D_) + " form " + f.str());
    return it->second;
}

int ClassGroup::class_of(const QForm& f_in) const {
    QForm f = D_ < 0 ? reduce_imag(f_in) : reduce_real(f_in, D_, sqrtD_);
    return cls_of_form_[lookup_reduced(f)];
}

int ClassGroup::compose_classes(int x, int y) const {
    return class_of(compose(reps_[x], reps_[y], D_, sqrtD_));
}

int ClassGroup::pow_class(int x, long long e) const {
    long long r = e % h_;
    if (r < 0) r += h_;
    if (r == 0) return principal_;
    return class_of(form_pow(reps_[x], r, D_, sqrtD_));
}

long long ClassGroup::class_order(int x) const {
    long long o = h_;
    for (int p : prime_factors(h_))
        while (o % p == 0 && pow_class(x, o / p) == principal_) o /= p;
    return o;
}

std::vector<long long> ClassGroup::invariant_factors() const {
    if (h_ == 1) return {};
    // p-rank profile from torsion counts: the number of invariant factors
    // with p-valuation >= k is log_p |Cl[p^k]| - log_p |Cl[p^(k-1)]|
    std::map<int, std::vector<int>> valuations;  // p -> per-slot valuation, largest first
    for (int p : prime_factors(h_)) {
        long long prev = 1;
        std::vector<int> ranks;
        long long pk = p;
        for (;;) {
            long long cnt = 0;
            for (int x = 0; x < h_; ++x)
                if (pow_class(x, pk) == principal_) ++cnt;
            if (cnt == prev) break;
            int r = 0;
            long long q = cnt / prev;
            while (q > 1) { q /= p; ++r; }
            ranks.push_back(r);
            prev = cnt;
            if (pk > h_) break;
            pk *= p;
        }
        // ranks[k-1] = number of factors with valuation >= k
        std::vector<int> vals;
        for (std::size_t k = 0; k < ranks.size(); ++k)
            for (int i = 0; i < ranks[k]; ++i) {
                if (static_cast<std::size_t>(i) >= vals.size()) vals.push_back(0);
                vals[i] = static_cast<int>(k) + 1;
            }
        valuations[p] = vals;
    }
    std::size_t slots = 0;
    for (auto& [p, v] : valuations) slots = std::max(slots, v.size());
    std::vector<long long> factors(slots, 1);
    for (auto& [p, v] : valuations)
        for (std::size_t i = 0; i < v.size(); ++i) {
            long long pk = 1;
            for (int k = 0; k < v[i]; ++k) pk *= p;
            factors[i] *= pk;   // slot 0 gets the largest p-power
        }
    std::sort(factors.begin(), factors.end());   // d1 | d2 | ... ascending
    long long prod = 1;
    for (long long d : factors) prod *= d;
    if (prod != h_)
        throw InternalCheckError("invariant_factors: product != group order");
    return factors;
}

long long ClassGroup::torsion_count(int p) const {
    int v = 0;
    long long m = h_;
    while (m % p == 0) { m /= p; ++v; }
    if (v == 0) return 1;
    // image of the power map x -> x^m is the Sylow p-subgroup
    long long pv = 1;
    for (int i = 0; i < v; ++i) pv *= p;
    std::vector<char> seen(h_, 0);
    std::vector<int> sylow;
    for (int x = 0; x < h_ && static_cast<long long>(sylow.size()) < pv; ++x) {
        int s = pow_class(x, m);
        if (!seen[s]) { seen[s] = 1; sylow.push_back(s); }
    }
    if (static_cast<long long>(sylow.size()) != pv)
        throw InternalCheckError("torsion_count: Sylow subgroup has wrong size");
    long long cnt = 0;
    for (int s : sylow)
        if (pow_class(s, p) == principal_) ++cnt;
    return cnt;
}

long long ClassGroup::brute_torsion_count(int p) const {
    long long cnt = 0;
    for (int x = 0; x < h_; ++x)
        if (pow_class(x, p) == principal_) ++cnt;
    return cnt;
}

bool ClassGroup::narrow_equals_wide() const {
    if (D_ < 0)
        throw std::logic_error("narrow_equals_wide: only for real discriminants");
    // norm -1 unit exists iff (-1, b~, *) lies in the principal cycle
    long long b = (sqrtD_ % 2 == (((D_ % 2) + 2) % 2)) ? sqrtD_ : sqrtD_ - 1;
    QForm neg{-1, b, static_cast<long long>((static_cast<__int128>(b) * b - D_) / -4)};
    return cls_of_form_[lookup_reduced(neg)] == principal_;
}

long long ClassGroup::wide_order() const {
    return narrow_equals_wide() ? h_ : h_ / 2;
}

const std::vector<int>& ClassGroup::principal_cycle_forms() const {
    if (D_ < 0)
        throw std::logic_error("principal_cycle_forms: only for real discriminants");
    return principal_cycle_;
}

ClassGroupSummary class_group(long long D) {
    ClassGroup G(D);
    ClassGroupSummary s;
    s.D = D;
    s.h = G.order();
    s.invariant_factors = G.invariant_factors();
    s.h2 = 1;
    s.h3 = 1;
    for (long long d : s.invariant_factors) {
        if (d % 2 == 0) s.h2 *= 2;
        if (d % 3 == 0) s.h3 *= 3;
    }
    return s;
}

} // namespace h3avg
