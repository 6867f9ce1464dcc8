#ifndef H3AVG_QUADFORM_HPP
#define H3AVG_QUADFORM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace h3avg {

// Primitive integral binary quadratic form a x^2 + b x y + c y^2 of
// discriminant D = b^2 - 4ac.  Machine integers cover every documented cap
// (|D| <= 1e10); composition uses 128-bit intermediates.
struct QForm {
    long long a = 0, b = 0, c = 0;

    bool operator==(const QForm&) const = default;
    std::uint64_t key() const {  // unique among reduced forms of one D
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(a))) << 32)
             | static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(b)));
    }
    std::string str() const;
};

long long form_disc(const QForm& f);
bool form_primitive(const QForm& f);

// ---- definite case (D < 0, a > 0) ----
bool is_reduced_imag(const QForm& f);
QForm reduce_imag(QForm f);
QForm principal_form_imag(long long D);
std::vector<QForm> reduced_forms_imag(long long D);     // all, deterministic order

// ---- indefinite case (D > 0 nonsquare) ----
bool is_reduced_real(const QForm& f, long long sqrtD);
QForm rho_step(const QForm& f, long long D, long long sqrtD);  // reduced -> next in cycle
QForm reduce_real(QForm f, long long D, long long sqrtD);
QForm principal_form_real(long long D, long long sqrtD);
std::vector<QForm> reduced_forms_real(long long D);     // all, deterministic order

// Gauss composition + reduction; inputs must share discriminant D and have
// positive leading coefficient.
QForm compose(const QForm& f1, const QForm& f2, long long D, long long sqrtD);
QForm form_inverse(const QForm& f, long long D, long long sqrtD);
QForm form_pow(QForm f, long long e, long long D, long long sqrtD);

} // namespace h3avg

#endif
