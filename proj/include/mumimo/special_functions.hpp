#pragma once

namespace mumimo {

// Exponential integral E_h(x) = int_1^inf exp(-x t) / t^h dt for integer
// order h >= 1 and x > 0. Relative accuracy ~1e-14 over the domains used
// by the rate formulas. Throws std::domain_error on bad arguments.
double exp_integral(int h, double x);

// log of Gamma_n(m) = prod_{i=1}^n Gamma(m - i + 1), m >= n >= 1. Kept in
// the log domain so the rate formulas stay finite for several hundred
// antennas.
double log_gamma_multi(int n, int m);

// f(m, n, x) = sum_{k=1}^n det Psi_{n,m}(k, x) / (Gamma_n(m) Gamma_n(n)),
// where Psi_{n,m}(k, x) is the n x n matrix whose (s,t) entry is
// (n+m-s-t)! for t != k and (n+m-s-t)! * sum_{h=1}^{n+m-s-t+1} E_h(x) for
// t == k. By convention f(m, 0, x) = 0, which keeps the rate expression
// well defined for a single user. Requires m >= n >= 0, x > 0.
double f_mmse(int m, int n, double x);

// exp(x) * (f(m, n, x) - f(m, n-1, x)) evaluated in the log domain; the
// naive product overflows for x beyond ~700 while the result stays finite.
double f_mmse_exp_diff(int m, int n, double x);

}  // namespace mumimo
