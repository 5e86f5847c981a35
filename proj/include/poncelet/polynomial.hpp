#pragma once

#include <array>
#include <vector>

#include "poncelet/types.hpp"

namespace poncelet {

// Roots of the monic cubic z^3 - c2 z^2 + c1 z - c0, sorted by argument in [0, 2pi).
std::array<Complex, 3> solve_cubic_complex(Complex c2, Complex c1, Complex c0);

// Real roots (with multiplicity, ascending) of sum coeffs[k] x^k.
// Vanishing leading coefficients drop the degree.
std::vector<double> solve_quartic_real(const std::array<double, 5>& coeffs);

// All complex roots of sum coeffs[k] x^k after trimming negligible leading terms.
std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs);

double eval_poly(const std::vector<double>& coeffs, double x);
Complex eval_poly(const std::vector<Complex>& coeffs, Complex z);

}  // namespace poncelet
