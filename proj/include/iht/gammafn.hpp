#pragma once

// Complex log-gamma (principal branch) in double and double-double precision,
// plus the three spectral weight densities used throughout:
//
//   sigma(b,c;s)      = |Gamma(b+is)Gamma(c+is)/Gamma(2is)|^2       (Plancherel)
//   weight_abc(a,..;s)= |Gamma(a+is)Gamma(b+is)Gamma(c+is)/Gamma(2is)|^2
//
// Everything is assembled in log space; 1/|Gamma(2is)|^2 grows like e^{2 pi s}
// and naive products overflow long before s = 500.

#include <complex>
#include <stdexcept>

#include "iht/dd.hpp"

namespace iht {

using cplx = std::complex<double>;

// principal-branch log-gamma; pole error on nonpositive integers
cplx log_gamma(cplx w);
cdd  log_gamma_dd(cdd w);

cplx gamma_fn(cplx w);  // exp(log_gamma)

double log_gamma_real(double x);  // lgamma with sign assumed positive domain

// |Gamma(b+is)Gamma(c+is)/Gamma(2is)|^2 for real s; -> 0 like 4 s^2 ... as s->0
double weight_sigma(double b, double c, double s);

// |Gamma(a+is)Gamma(b+is)Gamma(c+is)/Gamma(2is)|^2, real s.
// normalized=true divides by Gamma(theta)Gamma(theta-b+c) with theta=a+b, i.e.
// returns the tau of the van Dijk-Hille density given a = theta - b.
double weight_abc(double a, double b, double c, double s, bool normalized = false);

// log of the gamma-weight tail bound: log upper bound for weight_abc at s >= s0.
// Stirling: |Gamma(y+is)|^2 <= 2 pi s^{2y-1} e^{-pi s} e^{y...}; the bound below
// is rigorous for s >= max(4, a+b+c) and used for quadrature truncation.
double log_weight_abc_bound(double a, double b, double c, double s);
double log_weight_sigma_growth(double b, double c, double s);  // sigma ~ poly growth

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace iht
