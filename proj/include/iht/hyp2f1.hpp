#pragma once

// Gauss 2F1 evaluators.
//
// hyp2f1_line is the transform kernel 2F1(b+is, b-is; b+c; -x) on x >= 0 with
// s anywhere in C.  Region selection:
//   * x > 3: large-x connection formula (two series in -1/x, coefficients
//     Gamma(+-2is)); the logarithmic case 2is in Z is handled by an
//     eps-offset Richardson average (accuracy ~1e-8 there, documented).
//   * x <= 3: Pfaff-transformed series in w = x/(1+x).  The series cancels
//     down from a peak ~ exp(2|Re s| sqrt(w)); summation precision escalates
//     double -> double-double, and when even dd headroom is exceeded
//     (2|Re s| sqrt(w) > 55) the value is carried from x = 4 by Taylor
//     stepping of the hypergeometric ODE.
//
// hyp2f1_series_region is a plain 2F1 for |w| < 1 (real or complex
// parameters) used by the reproducing kernel, the W-measure density and the
// translate kernel; near w = 1 it switches to the z -> 1-z connection.

#include <complex>
#include <stdexcept>

#include "iht/gammafn.hpp"

namespace iht {

struct non_convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx hyp2f1_line(double b, double c, cplx s, double x);

cplx hyp2f1_series_region(cplx alpha, cplx beta, cplx gamma, cplx w);

// |LHS - RHS| of the three-term relation between 2F1(p-1,q+1), 2F1(p,q),
// 2F1(p+1,q-1) at argument y, all sides summed in dd.
double contiguous_residual_23(cplx p, cplx q, cplx r, cplx y);

}  // namespace iht
