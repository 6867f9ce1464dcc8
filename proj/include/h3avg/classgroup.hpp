#ifndef H3AVG_CLASSGROUP_HPP
#define H3AVG_CLASSGROUP_HPP

#include <unordered_map>
#include <vector>

#include "h3avg/quadform.hpp"

namespace h3avg {

// Form class group of discriminant D: the ideal class group for D < 0 and
// the narrow class group for D > 0 (classes = cycles of reduced forms).
class ClassGroup {
public:
    explicit ClassGroup(long long D);

    long long disc() const { return D_; }
    long long order() const { return h_; }                  // h (narrow h+ for D > 0)
    int identity() const { return principal_; }
    const QForm& rep(int cls) const { return reps_[cls]; }  // reduced, a > 0

    int class_of(const QForm& f) const;                     // f need not be reduced
    int compose_classes(int x, int y) const;
    int pow_class(int x, long long e) const;
    long long class_order(int x) const;

    std::vector<long long> invariant_factors() const;       // d1 | d2 | ...
    long long torsion_count(int p) const;                   // |Cl[p]| via Sylow power map
    long long brute_torsion_count(int p) const;             // loop over all classes

    // D > 0 only
    bool narrow_equals_wide() const;                        // norm -1 unit exists
    long long wide_order() const;                           // h (ordinary class number)
    const std::vector<int>& principal_cycle_forms() const;  // indices into all_forms
    const std::vector<QForm>& all_forms() const { return forms_; }
    int cycle_of_form(int idx) const { return cls_of_form_[idx]; }

private:
    int lookup_reduced(const QForm& f) const;

    long long D_ = 0, sqrtD_ = 0, h_ = 0;
    int principal_ = 0;
    std::vector<QForm> forms_;                 // all reduced forms, deterministic order
    std::vector<int> cls_of_form_;             // form index -> class index
    std::vector<QForm> reps_;                  // class -> canonical representative
    std::unordered_map<std::uint64_t, int> index_;   // reduced form key -> form index
    std::vector<int> principal_cycle_;         // D > 0: form indices of the identity cycle
};

struct ClassGroupSummary {
    long long D;
    long long h;                       // order of the computed group
    std::vector<long long> invariant_factors;
    long long h2, h3;
};

ClassGroupSummary class_group(long long D);

} // namespace h3avg

#endif
