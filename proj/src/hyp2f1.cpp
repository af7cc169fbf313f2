#include "iht/hyp2f1.hpp"

#include <algorithm>
#include <cmath>

namespace iht {

namespace {

constexpr double kConnX = 3.0;      // switch to the 1/x connection series
constexpr double kDegenTol = 5e-4;  // distance of 2is from Z that counts as degenerate
constexpr double kEps = 1e-4;       // Richardson offset for the degenerate case

double dist_to_int(cplx z) {
  return std::abs(z - std::round(z.real()));
}

bool near_nonpos_int(double x) {
  double r = std::round(x);
  return r <= 0.0 && std::abs(x - r) < 1e-12;
}

// --- generic series sum ------------------------------------------------------

template <class C>
struct series_traits;
template <>
struct series_traits<cplx> {
  static constexpr double eps = 4e-17;
  static double mag(cplx z) { return std::abs(z); }
};
template <>
struct series_traits<cdd> {
  static constexpr double eps = 2e-32;
  static double mag(const cdd& z) { return abs_est(z); }
};

template <class C>
C gauss_series(C a, C b, C c, C w, long nmax = 40000) {
  using tr = series_traits<C>;
  C term(1.0), sum(1.0);
  double peak = 1.0;
  long n = 0;
  int small_count = 0;
  while (n < nmax) {
    C num = (a + C(double(n))) * (b + C(double(n)));
    C den = (c + C(double(n))) * C(double(n + 1));
    term = term * (num / den) * w;
    sum = sum + term;
    double tm = tr::mag(term);
    peak = std::max(peak, tm);
    double floor = tr::eps * std::max(tr::mag(sum), 1e-30 * peak);
    if (tm < floor) {
      if (++small_count >= 3) return sum;
    } else {
      small_count = 0;
    }
    ++n;
  }
  throw non_convergence_error("2F1 series did not converge");
}

cdd cadd_from(cplx z) { return cdd(z); }

// --- Pfaff series path -------------------------------------------------------

// 2F1(b+is, b-is; b+c; -x) = (1+x)^{-(b+is)} 2F1(b+is, c+is; b+c; w), w = x/(1+x)
cplx pfaff_double(double b, double c, cplx s, double x) {
  cplx is = cplx(0.0, 1.0) * s;
  double w = x / (1.0 + x);
  cplx pre = std::exp(-(b + is) * std::log1p(x));
  cplx ser = gauss_series<cplx>(b + is, c + is, cplx(b + c), cplx(w));
  return pre * ser;
}

cplx pfaff_dd(double b, double c, cplx s, double x) {
  cdd is = cdd(cplx(0.0, 1.0)) * cadd_from(s);
  dd w = dd(x) / (dd(x) + 1.0);
  cdd pre = cdd_exp(-(cdd(b) + is) * cdd(dd_log(dd(x) + 1.0)));
  cdd ser = gauss_series<cdd>(cdd(b) + is, cdd(c) + is, cdd(b + c), cdd(w));
  return (pre * ser).to_complex();
}

// --- connection path ---------------------------------------------------------

// one connection term: Gamma(b+c)Gamma(-2is)/(Gamma(b-is)Gamma(c-is))
//                      * x^{-(b+is)} * 2F1(b+is, 1-c+is; 1+2is; -1/x)
cdd connection_term(double b, double c, cdd is, double x) {
  cdd lg = log_gamma_dd(cdd(b + c)) + log_gamma_dd(-(is * 2.0)) -
           log_gamma_dd(cdd(b) - is) - log_gamma_dd(cdd(c) - is);
  cdd coef = cdd_exp(lg);
  cdd expo = cdd_exp(-(cdd(b) + is) * cdd(dd_log(dd(x))));
  cdd ser = gauss_series<cdd>(cdd(b) + is, cdd(1.0 - c) + is, cdd(1.0) + is * 2.0,
                              cdd(dd(-1.0) / dd(x)));
  return coef * expo * ser;
}

cplx connection(double b, double c, cplx s, double x) {
  cdd is = cdd(cplx(0.0, 1.0)) * cadd_from(s);
  cdd t1 = connection_term(b, c, is, x);
  if (s.imag() == 0.0) {
    // the mirror term is the conjugate
    cplx t = t1.to_complex();
    return 2.0 * t.real();
  }
  cdd t2 = connection_term(b, c, -is, x);
  return (t1 + t2).to_complex();
}

cplx connection_guarded(double b, double c, cplx s, double x) {
  cplx two_is = 2.0 * cplx(0.0, 1.0) * s;
  if (dist_to_int(two_is) < kDegenTol) {
    // logarithmic case: average over a real offset in s (Richardson),
    // accuracy drops to ~1e-8 here
    cplx fp = connection(b, c, s + kEps, x);
    cplx fm = connection(b, c, s - kEps, x);
    return 0.5 * (fp + fm);
  }
  return connection(b, c, s, x);
}

// --- ODE Taylor continuation --------------------------------------------------

// x(1+x) F'' + [g + (2b+1)x] F' + (b^2+s^2) F = 0,  g = b+c.
// Step the solution from x0 (seeded by the connection formula) down to xt.
struct ode_state {
  double x;
  cdd f, fp;
};

void taylor_step(double b, double c, cplx s, ode_state& st, double h) {
  const int kmax = 400;
  double x0 = st.x;
  dd A = dd(x0) * dd(1.0 + x0);
  double B = 1.0 + 2.0 * x0;
  double Cc = (b + c) + (2.0 * b + 1.0) * x0;
  double D = 2.0 * b + 1.0;
  cdd E = cdd(b * b) + cadd_from(s) * cadd_from(s);

  cdd ck = st.f, ck1 = st.fp;  // c_k, c_{k+1} rolling pair (k starts at 0)
  cdd hp(1.0);                 // h^k
  cdd fsum(0.0), fpsum(0.0);
  double fmax = 0.0;
  int small_count = 0;
  for (int k = 0; k < kmax; ++k) {
    cdd fterm = ck * hp;
    fsum += fterm;
    fpsum += ck1 * hp * double(k + 1);
    fmax = std::max(fmax, abs_est(fterm));
    if (abs_est(fterm) < 1e-36 * fmax && k > 4) {
      if (++small_count >= 3) break;
    } else {
      small_count = 0;
    }
    // c_{k+2} = -[ (k+1)(Bk + C) c_{k+1} + (k(k-1) + Dk + E) c_k ] / (A (k+2)(k+1))
    cdd num = ck1 * double((k + 1)) * dd(B * k + Cc) +
              (cdd(double(k * (k - 1)) + D * k) + E) * ck;
    cdd ck2 = -(num / cdd(A * dd(double((k + 2) * (k + 1)))));
    ck = ck1;
    ck1 = ck2;
    hp = hp * cdd(dd(h));
  }
  // fpsum accumulated sum_{k} (k+1) c_{k+1} h^k = F'(x0+h)
  st.x = x0 + h;
  st.f = fsum;
  st.fp = fpsum;
}

cplx continuation(double b, double c, cplx s, double xt) {
  const double x0 = 4.0;
  ode_state st;
  st.x = x0;
  // seeds from the connection formula; F' = -((b+is)(b-is)/(b+c)) * shifted kernel
  st.f = cdd(connection_guarded(b, c, s, x0));
  cplx fac = -((b + cplx(0, 1) * s) * (b - cplx(0, 1) * s)) / (b + c);
  st.fp = cdd(fac * connection_guarded(b + 1.0, c + 1.0, s, x0));
  int guard = 0;
  while (st.x > xt && guard++ < 300) {
    double omega = std::abs(s.real()) / std::sqrt(std::max(xt, 1e-6) * (1.0 + xt));
    double hmax_phase = omega > 0.0 ? 12.0 / omega : 1e9;
    double h = std::min({0.45 * st.x, hmax_phase, st.x - xt});
    taylor_step(b, c, s, st, -h);
  }
  if (st.x > xt + 1e-12) throw non_convergence_error("2F1 continuation stalled");
  return st.f.to_complex();
}

}  // namespace

cplx hyp2f1_line(double b, double c, cplx s, double x) {
  if (near_nonpos_int(b + c)) throw pole_error("hyp2f1_line: b+c is a nonpositive integer");
  if (x < 0.0) throw std::domain_error("hyp2f1_line: x must be >= 0");
  if (x == 0.0) return 1.0;
  if (s.real() < 0.0) s = -s;  // kernel is even in s
  bool real_s = (s.imag() == 0.0);

  double w = x / (1.0 + x);
  double cancel_nats = 2.0 * std::abs(s.real()) * std::sqrt(w);

  cplx f;
  if (x > kConnX) {
    f = connection_guarded(b, c, s, x);
  } else if (cancel_nats < 7.0) {
    f = pfaff_double(b, c, s, x);
  } else if (cancel_nats < 55.0) {
    f = pfaff_dd(b, c, s, x);
  } else {
    f = continuation(b, c, s, x);
  }
  if (real_s) f = cplx(f.real(), 0.0);
  return f;
}

cplx hyp2f1_series_region(cplx alpha, cplx beta, cplx gamma, cplx w) {
  if (near_nonpos_int(gamma.real()) && std::abs(gamma.imag()) < 1e-12)
    throw pole_error("hyp2f1_series_region: gamma is a nonpositive integer");
  double aw = std::abs(w);
  if (aw >= 1.0) throw std::domain_error("hyp2f1_series_region: |w| >= 1");
  if (aw <= 0.8)
    return gauss_series<cdd>(cdd(alpha), cdd(beta), cdd(gamma), cdd(w)).to_complex();

  double d_direct = (alpha + beta - gamma).real();
  bool real_case = std::abs(alpha.imag()) + std::abs(beta.imag()) + std::abs(gamma.imag()) < 1e-14;

  if (real_case && w.imag() == 0.0 && w.real() > 0.8) {
    // z -> 1-z connection; eps-Richardson when gamma-alpha-beta is near an integer
    double a = alpha.real(), bb = beta.real(), g = gamma.real();
    auto eval = [&](double gg) -> cplx {
      double m = gg - a - bb;
      cdd y = cdd(1.0 - w.real());
      cdd G1 = cdd_exp(log_gamma_dd(cdd(gg)) + log_gamma_dd(cdd(m)) -
                       log_gamma_dd(cdd(gg - a)) - log_gamma_dd(cdd(gg - bb)));
      cdd G2 = cdd_exp(log_gamma_dd(cdd(gg)) + log_gamma_dd(cdd(-m)) -
                       log_gamma_dd(cdd(a)) - log_gamma_dd(cdd(bb)));
      cdd s1 = gauss_series<cdd>(cdd(a), cdd(bb), cdd(a + bb - gg + 1.0), y);
      cdd s2 = gauss_series<cdd>(cdd(gg - a), cdd(gg - bb), cdd(gg - a - bb + 1.0), y);
      cdd ym = cdd_exp(cdd(dd_log(y.re)) * cdd(m));
      return (G1 * s1 + G2 * ym * s2).to_complex();
    };
    double m = g - a - bb;
    if (std::abs(m - std::round(m)) < 1e-3) {
      const double del = 1e-5;
      return 0.5 * (eval(g + del) + eval(g - del));
    }
    return eval(g);
  }

  if (d_direct > 0.0) {
    // Euler transform improves the tail index to -d_direct
    cdd pre = cdd_exp(cdd_log(cdd(1.0) - cdd(w)) * cdd(gamma - alpha - beta));
    cdd ser = gauss_series<cdd>(cdd(gamma - alpha), cdd(gamma - beta), cdd(gamma), cdd(w), 400000);
    return (pre * ser).to_complex();
  }
  return gauss_series<cdd>(cdd(alpha), cdd(beta), cdd(gamma), cdd(w), 400000).to_complex();
}

double contiguous_residual_23(cplx p, cplx q, cplx r, cplx y) {
  if (std::abs(y) >= 1.0) throw std::domain_error("contiguous_residual_23: |y| >= 1");
  cplx d = p - q;
  if (std::min({std::abs(d), std::abs(d - 1.0), std::abs(d + 1.0)}) < 1e-10)
    throw pole_error("contiguous_residual_23: p-q in {0,+-1}");
  cdd A = cdd(q * (r - p)) / cdd((q - p) * (1.0 + q - p));
  cdd B = cdd(p * (r - q)) / cdd((p - q) * (1.0 + p - q));
  cdd Fm = gauss_series<cdd>(cdd(p - 1.0), cdd(q + 1.0), cdd(r), cdd(y));
  cdd F0 = gauss_series<cdd>(cdd(p), cdd(q), cdd(r), cdd(y));
  cdd Fp = gauss_series<cdd>(cdd(p + 1.0), cdd(q - 1.0), cdd(r), cdd(y));
  cdd lhs = cdd(-y) * F0;
  cdd rhs = A * Fm - (A + B) * F0 + B * Fp;
  return abs_est(lhs - rhs);
}

}  // namespace iht
