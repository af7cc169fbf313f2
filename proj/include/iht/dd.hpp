#pragma once

// Double-double arithmetic (Dekker/Knuth error-free transforms, FMA products).
// Gives ~31 significant decimal digits.  The hypergeometric series for the
// conjugate-parameter 2F1 cancel down from a peak term of order exp(2|s|sqrt(w));
// plain double runs out of headroom near s ~ 15 already, dd is good to
// 2|s|sqrt(w) ~ 55 or so.  Only +,-,*,/ and the elementary functions needed by
// the series/connection kernels are provided.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>

namespace iht {

struct dd {
  double hi = 0.0;
  double lo = 0.0;
  constexpr dd() = default;
  constexpr dd(double h) : hi(h) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}
  explicit operator double() const { return hi; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}
inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b| or a == 0
  double s = a + b;
  return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  double lo = s.lo + t.hi;
  dd r = quick_two_sum(s.hi, lo);
  r.lo += t.lo;
  return quick_two_sum(r.hi, r.lo);
}
inline dd operator+(dd a, double b) {
  dd s = two_sum(a.hi, b);
  return quick_two_sum(s.hi, s.lo + a.lo);
}
inline dd operator+(double a, dd b) { return b + a; }

inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator-(dd a, double b) { return a + (-b); }
inline dd operator-(double a, dd b) { return (-b) + a; }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}
inline dd operator*(dd a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}
inline dd operator*(double a, dd b) { return b * a; }

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + q3;
}
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline bool operator<(dd a, dd b)  { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b)  { return b < a; }
inline bool operator<=(dd a, dd b) { return !(b < a); }
inline bool operator>=(dd a, dd b) { return !(a < b); }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd fabs(dd a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_sqrt(dd a) {
  if (a.hi <= 0.0) return dd(std::sqrt(a.hi));
  double y = std::sqrt(a.hi);
  // one Newton step: y + (a - y^2)/(2y)
  dd r = (a - two_prod(y, y)) / (2.0 * y);
  return r + y;
}

namespace ddc {  // dd constants
inline constexpr dd pi      {3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd two_pi  {6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd pi_half {1.5707963267948966, 6.123233995736766e-17};
inline constexpr dd ln2     {0.6931471805599453, 2.3190468138462996e-17};
}  // namespace ddc

// exp: reduce x = k ln2 + r, r/2^9 Taylor, square back.
inline dd dd_exp(dd a) {
  if (a.hi > 700.0) return dd(std::numeric_limits<double>::infinity());
  if (a.hi < -740.0) return dd(0.0);
  double k = std::round(a.hi / ddc::ln2.hi);
  dd r = (a - ddc::ln2 * k) * (1.0 / 512.0);
  // Taylor of exp(r) - 1, |r| <= ln2/1024
  dd p = r;
  dd term = r;
  for (int i = 2; i <= 9; ++i) {
    term = term * r / double(i);
    p = p + term;
  }
  // (1+p)^512 - 1 via repeated squaring of the "minus one" form: q <- q^2 + 2q
  for (int i = 0; i < 9; ++i) p = p * p + 2.0 * p;
  dd res = p + 1.0;
  return res * std::ldexp(1.0, int(k));
}

inline dd dd_log(dd a) {
  // Newton on exp: y1 = y0 + a*exp(-y0) - 1, twice
  double y0 = std::log(a.hi);
  dd y = dd(y0) + a * dd_exp(dd(-y0)) - 1.0;
  y = y + a * dd_exp(-y) - 1.0;
  return y;
}

inline dd dd_log1p(dd a) { return dd_log(a + 1.0); }

namespace detail {
inline dd sin_taylor(dd r) {
  dd r2 = r * r, term = r, s = r;
  for (int i = 1; i <= 11; ++i) {
    term = term * r2 * (-1.0 / double((2 * i) * (2 * i + 1)));
    s = s + term;
  }
  return s;
}
inline dd cos_taylor(dd r) {
  dd r2 = r * r, term = dd(1.0), s = dd(1.0);
  for (int i = 1; i <= 11; ++i) {
    term = term * r2 * (-1.0 / double((2 * i - 1) * (2 * i)));
    s = s + term;
  }
  return s;
}
}  // namespace detail

inline void dd_sincos(dd a, dd& sn, dd& cs) {
  // reduce modulo pi/2; total phase in this code base stays < ~1e4 so the
  // dd-precision constant keeps the reduction error near 1e-28 absolute
  double q = std::round(a.hi / ddc::pi_half.hi);
  dd r = a - ddc::pi_half * q;
  long iq = long(q) & 3L;
  if (iq < 0) iq += 4;
  dd s = detail::sin_taylor(r), c = detail::cos_taylor(r);
  switch (iq) {
    case 0: sn = s;  cs = c;  break;
    case 1: sn = c;  cs = -s; break;
    case 2: sn = -s; cs = -c; break;
    default: sn = -c; cs = s; break;
  }
}
inline dd dd_sin(dd a) { dd s, c; dd_sincos(a, s, c); return s; }
inline dd dd_cos(dd a) { dd s, c; dd_sincos(a, s, c); return c; }

inline dd dd_atan2(dd y, dd x) {
  if (y.hi == 0.0 && y.lo == 0.0) return x.hi >= 0.0 ? dd(0.0) : ddc::pi;
  double a0 = std::atan2(y.hi, x.hi);
  // one Newton correction: d = (y cos a - x sin a)/(x cos a + y sin a)
  dd s, c;
  dd_sincos(dd(a0), s, c);
  dd num = y * c - x * s;
  dd den = x * c + y * s;
  return dd(a0) + num / den;
}

inline dd dd_sinh(dd a) {
  if (std::fabs(a.hi) < 0.05) {  // series, avoids cancellation
    dd a2 = a * a, term = a, s = a;
    for (int i = 1; i <= 7; ++i) {
      term = term * a2 / double((2 * i) * (2 * i + 1));
      s = s + term;
    }
    return s;
  }
  dd e = dd_exp(a);
  return (e - 1.0 / e) * 0.5;
}
inline dd dd_cosh(dd a) {
  dd e = dd_exp(a);
  return (e + 1.0 / e) * 0.5;
}

// ---------------------------------------------------------------------------
// complex double-double
// ---------------------------------------------------------------------------
struct cdd {
  dd re, im;
  cdd() = default;
  cdd(dd r) : re(r), im(0.0) {}
  cdd(double r) : re(r), im(0.0) {}
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}
  std::complex<double> to_complex() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(cdd a, cdd b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator-(cdd a) { return {-a.re, -a.im}; }
inline cdd operator*(cdd a, cdd b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator*(cdd a, dd b) { return {a.re * b, a.im * b}; }
inline cdd operator*(dd b, cdd a) { return a * b; }
inline cdd operator*(cdd a, double b) { return {a.re * b, a.im * b}; }
inline cdd operator/(cdd a, dd b) { return {a.re / b, a.im / b}; }
inline cdd operator/(cdd a, cdd b) {
  dd n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline cdd& operator+=(cdd& a, cdd b) { a = a + b; return a; }
inline cdd& operator*=(cdd& a, cdd b) { a = a * b; return a; }
inline cdd conj(cdd a) { return {a.re, -a.im}; }
inline dd abs2(cdd a) { return a.re * a.re + a.im * a.im; }
inline double abs_est(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

inline cdd cdd_exp(cdd a) {
  dd m = dd_exp(a.re), s, c;
  dd_sincos(a.im, s, c);
  return {m * c, m * s};
}
inline cdd cdd_log(cdd a) {
  return {dd_log(abs2(a)) * 0.5, dd_atan2(a.im, a.re)};
}
inline cdd cdd_sqrt(cdd a) { return cdd_exp(cdd_log(a) * 0.5); }

}  // namespace iht
