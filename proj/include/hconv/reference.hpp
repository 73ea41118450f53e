#pragma once

#include <array>

#include "hconv/cpoly.hpp"

// Reduction chains as displayed in the source for the quartic and sextic
// dilatation numerators: cohn_reduce(p_{i-1}) = scalar_i * p_i, with p_0 = p.

namespace hconv::reference {

struct DisplayedChain {
    ComplexPolynomial p;
    std::array<ComplexPolynomial, 3> factors;
    std::array<double, 3> scalars{};
};

/// Chain for z^4 + (1-a)z^3 + (1+a^2-4a)z^2 + a(a-1)z + a^2.
DisplayedChain quadratic_mobius_chain(double a);

/// Chain for z^4 + (1-4a+a^2)z^3 + (1-4a+4a^2-a^3)z^2 + (-a+4a^2-a^3)z - a^3.
DisplayedChain squared_mobius_chain(double a);

/// Chain for the sextic numerator of the -w, w^2 combination.
DisplayedChain sextic_chain(double t, double alpha1, double alpha2);

/// w^3 + (2t-1+alpha1 t+alpha2(1-t))w^2 + (1-alpha2(1-t)+alpha1 t)w + (2t-1);
/// the -w, w combination has dilatation -w c(w) / c*(w).
ComplexPolynomial combination_cubic(double t, double alpha1, double alpha2);

/// w^6 + (t-1)w^5 + (alpha2+(1+alpha1-alpha2)t)w^4 + alpha2(t-1)w^3 + (1+alpha1 t)w^2 + (t-1)w + t;
/// the -w, w^2 combination has dilatation -w p(w) / p*(w).
ComplexPolynomial combination_sextic(double t, double alpha1, double alpha2);

} // namespace hconv::reference
