#include "frey/models.hpp"

namespace frey::models {

CyclotomicInt omega(unsigned j) {
    if (j % kConductor == 0) return CyclotomicInt(2L);
    return CyclotomicInt::zeta_power(j) + CyclotomicInt::zeta_power(-static_cast<long>(j));
}

BivariatePoly quadratic_factor(unsigned j) {
    BivariatePoly f;
    f.add_term(2, 0, CyclotomicInt(1L));
    f.add_term(1, 1, omega(j));
    f.add_term(0, 2, CyclotomicInt(1L));
    return f;
}

FreyCurveModel quadratic_family() {
    const BivariatePoly alpha = (omega(3) - omega(4)) * quadratic_factor(1);
    const BivariatePoly beta = (omega(4) - omega(1)) * quadratic_factor(3);
    const BivariatePoly gamma = (omega(1) - omega(3)) * quadratic_factor(4);
    const CyclotomicInt three(3L);
    const BivariatePoly s1 = three * (beta - alpha);
    const BivariatePoly s2 = three * (alpha - gamma);
    const BivariatePoly s3 = three * (gamma - beta);
    std::array<BivariatePoly, 5> a;
    a[3] = s1 * s2 + s1 * s3 + s2 * s3;
    a[4] = CyclotomicInt(-1L) * (s1 * s2 * s3);
    return FreyCurveModel::make("E_ab", Subfield::quadratic, a);
}

FreyCurveModel cubic_family() {
    const BivariatePoly alpha = (omega(1) - omega(5)) * quadratic_factor(0);
    const BivariatePoly beta = (omega(5) - omega(0)) * quadratic_factor(1);
    const BivariatePoly shift = CyclotomicInt(2L) * alpha + CyclotomicInt(4L) * beta;
    const BivariatePoly alpha_sq4 = CyclotomicInt(-4L) * (alpha * alpha);
    std::array<BivariatePoly, 5> a;
    a[1] = shift;
    a[3] = alpha_sq4;
    a[4] = alpha_sq4 * shift;
    return FreyCurveModel::make("F_ab", Subfield::cubic, a);
}

} // namespace frey::models
