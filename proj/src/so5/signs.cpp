#include "uqrep/cyclo/signature.hpp"
#include "uqrep/so5/verma.hpp"

namespace uqrep::so5 {

int half_sign(const QParams& p) {
    int order = p.base_order();
    CycloNumber s = p.qpow(make_rational(1, 2), order);
    auto sign = cyclo::sign_of_real(s + s.inverse());
    if (sign == cyclo::Sign::zero) throw DomainError("[1/2]_q is undefined at this root of unity");
    return sign == cyclo::Sign::positive ? 1 : -1;
}

FormSigns compact_signs(const QParams& p) { return {1, half_sign(p)}; }
FormSigns so23_signs(const QParams& p) { return {-1, half_sign(p)}; }

}  // namespace uqrep::so5
