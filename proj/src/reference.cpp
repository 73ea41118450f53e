#include "hconv/reference.hpp"

#include "hconv/convo.hpp"

namespace hconv::reference {

DisplayedChain quadratic_mobius_chain(double a) {
    const double a2 = a * a;
    const double a3 = a2 * a;
    const double a4 = a2 * a2;
    DisplayedChain c;
    c.p = quadratic_mobius_quartic(a);
    c.factors[0] = ComplexPolynomial{-a, 1.0 + a2 - 4.0 * a, 1.0 - a + a2, 1.0 + a2};
    c.factors[1] = ComplexPolynomial{1.0 - 3.0 * a + a2 - 3.0 * a3 + a4, 1.0 - 2.0 * a2 + a4, 1.0 + a2 + a4};
    c.factors[2] = ComplexPolynomial{(1.0 + a) * (1.0 + a), 2.0 + a + 2.0 * a2};
    c.scalars = {1.0 - a2, 1.0, 3.0 * a * (a - 1.0) * (a - 1.0) * (1.0 + a2)};
    return c;
}

DisplayedChain squared_mobius_chain(double a) {
    double pw[9] = {1.0};
    for (int k = 1; k < 9; ++k) pw[k] = pw[k - 1] * a;
    const double l = 1.0 + pw[2] + 8.0 * pw[3] - 15.0 * pw[4] + 8.0 * pw[5] + pw[6] + pw[8];
    const double b = (1.0 - 4.0 * a + pw[2]) * (1.0 - a + pw[2]) * (1.0 - a + pw[2]) * (1.0 + 3.0 * a + pw[2]);
    const double c0 = 1.0 - 3.0 * a - 2.0 * pw[2] + 11.0 * pw[3] - 9.0 * pw[4] + 11.0 * pw[5] - 2.0 * pw[6] -
                      3.0 * pw[7] + pw[8];
    DisplayedChain c;
    c.p = squared_mobius_quartic(a);
    c.factors[0] = ComplexPolynomial{-(a - 4.0 * pw[2] + pw[3]), 1.0 - 4.0 * a + 5.0 * pw[2] - 4.0 * pw[3] + pw[4],
                                     1.0 - 4.0 * a + 2.0 * pw[2] - 4.0 * pw[3] + pw[4], 1.0 + pw[2] + pw[4]};
    c.factors[1] = ComplexPolynomial{c0, b, l};
    c.factors[2] = ComplexPolynomial{
        1.0 - 2.0 * a - 8.0 * pw[2] + 8.0 * pw[3] - 8.0 * pw[4] - 2.0 * pw[5] + pw[6],
        2.0 - a - 4.0 * pw[2] + 16.0 * pw[3] - 4.0 * pw[4] - pw[5] + 2.0 * pw[6]};
    const double s = pw[2] - 1.0;
    c.scalars = {1.0 - pw[2], 1.0, 3.0 * a * s * s * (1.0 + pw[2] + pw[4])};
    return c;
}

DisplayedChain sextic_chain(double t, double alpha1, double alpha2) {
    const double d = alpha1 - alpha2;
    const double mid = alpha1 + 3.0 * alpha2 + d * t;
    DisplayedChain c;
    c.p = combination_sextic(t, alpha1, alpha2);
    c.factors[0] = ComplexPolynomial{-(1.0 - t), 1.0 + (1.0 + alpha1 - alpha2) * t, -alpha2 * (1.0 - t),
                                     alpha2 + alpha1 * t, -(1.0 - t), 1.0 + t};
    c.factors[1] = ComplexPolynomial{4.0 + d * (1.0 + t), d * (1.0 - t), mid, d * (1.0 - t), 4.0};
    c.factors[2] = ComplexPolynomial{d * (1.0 - t), mid, d * (1.0 - t), 8.0 + d * (1.0 + t)};
    c.scalars = {1.0 - t, t, -d * (1.0 + t)};
    return c;
}

ComplexPolynomial combination_cubic(double t, double alpha1, double alpha2) {
    return ComplexPolynomial{2.0 * t - 1.0, 1.0 - alpha2 * (1.0 - t) + alpha1 * t,
                             2.0 * t - 1.0 + alpha1 * t + alpha2 * (1.0 - t), 1.0};
}

ComplexPolynomial combination_sextic(double t, double alpha1, double alpha2) {
    return ComplexPolynomial{t,
                             t - 1.0,
                             1.0 + alpha1 * t,
                             alpha2 * (t - 1.0),
                             alpha2 + (1.0 + alpha1 - alpha2) * t,
                             t - 1.0,
                             1.0};
}

} // namespace hconv::reference
