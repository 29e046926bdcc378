#include "mumimo/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mumimo {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// E_1 by the alternating series, accurate for x < 1.
double e1_series(double x) {
  double sum = -kEulerGamma - std::log(x);
  double term = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= -x / k;
    const double add = -term / k;
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Modified-Lentz continued fraction for E_h, reliable for x >= 1 at any
// order. Evaluating each order directly avoids the loss of accuracy the
// upward recurrence suffers while h < x.
double en_continued_fraction(int h, double x) {
  constexpr double tiny = 1e-300;
  double b = x + h;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double f = d;
  for (int i = 1; i <= 1000; ++i) {
    const double a = -static_cast<double>(i) * (h - 1 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    f *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return f * std::exp(-x);
}

struct SignedLogDet {
  int sign = 0;        // -1, 0, +1
  double log_abs = 0;  // ln |det|, meaningful when sign != 0
};

// Determinant of a matrix given entrywise as ln(entry) with all entries
// positive. Each row is scaled by its largest entry before the partial-pivot
// LU so the elimination runs on numbers of order one; the pulled-out factors
// are accumulated in the log.
SignedLogDet det_from_log_entries(std::vector<double>& log_entries, int n) {
  double log_scale = 0.0;
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    const double* row = &log_entries[static_cast<size_t>(s) * n];
    const double row_max = *std::max_element(row, row + n);
    log_scale += row_max;
    for (int t = 0; t < n; ++t) a[static_cast<size_t>(s) * n + t] = std::exp(row[t] - row_max);
  }

  int sign = 1;
  double log_det = 0.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a[static_cast<size_t>(r) * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return {0, 0.0};
    if (pivot != col) {
      for (int t = 0; t < n; ++t)
        std::swap(a[static_cast<size_t>(pivot) * n + t], a[static_cast<size_t>(col) * n + t]);
      sign = -sign;
    }
    const double p = a[static_cast<size_t>(col) * n + col];
    if (p < 0) sign = -sign;
    log_det += std::log(std::abs(p));
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[static_cast<size_t>(r) * n + col] / p;
      if (factor == 0.0) continue;
      for (int t = col; t < n; ++t)
        a[static_cast<size_t>(r) * n + t] -= factor * a[static_cast<size_t>(col) * n + t];
    }
  }
  return {sign, log_det + log_scale};
}

// ln det Psi_{n,m}(k, x) for each k, with log_esum[L] = ln sum_{h<=L} E_h(x).
std::vector<SignedLogDet> psi_log_dets(int m, int n, const std::vector<double>& log_esum) {
  std::vector<double> log_fact(static_cast<size_t>(n + m - 1));
  for (int j = 0; j <= n + m - 2; ++j) log_fact[j] = std::lgamma(static_cast<double>(j) + 1.0);

  std::vector<SignedLogDet> dets(n);
  std::vector<double> entries(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    for (int s = 1; s <= n; ++s) {
      for (int t = 1; t <= n; ++t) {
        const int j = n + m - s - t;
        double v = log_fact[j];
        if (t == k) v += log_esum[j + 1];
        entries[static_cast<size_t>(s - 1) * n + (t - 1)] = v;
      }
    }
    dets[k - 1] = det_from_log_entries(entries, n);
  }
  return dets;
}

std::vector<double> log_esum_table(int max_order, double x) {
  std::vector<double> table(static_cast<size_t>(max_order) + 1, 0.0);
  double acc = 0.0;
  for (int h = 1; h <= max_order; ++h) {
    acc += exp_integral(h, x);
    table[h] = std::log(acc);
  }
  return table;
}

// Signed log-sum-exp of a list of (sign, ln|value|) terms, with shift added
// to every exponent.
double signed_sum(const std::vector<SignedLogDet>& terms, double shift, double* log_abs_out) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) peak = std::max(peak, t.log_abs);
  if (!std::isfinite(peak)) {
    if (log_abs_out) *log_abs_out = -std::numeric_limits<double>::infinity();
    return 0.0;
  }
  double acc = 0.0;
  for (const auto& t : terms)
    if (t.sign != 0) acc += t.sign * std::exp(t.log_abs - peak);
  if (log_abs_out) *log_abs_out = peak + shift;
  return acc;  // caller multiplies by exp(peak + shift)
}

}  // namespace

double exp_integral(int h, double x) {
  if (h < 1) throw std::domain_error("exp_integral: order must be >= 1");
  if (!(x > 0.0)) throw std::domain_error("exp_integral: x must be > 0");
  if (x >= 1.0) return en_continued_fraction(h, x);
  double e = e1_series(x);
  // Upward recurrence E_{j+1} = (exp(-x) - x E_j) / j; contractive for x < 1.
  const double ex = std::exp(-x);
  for (int j = 1; j < h; ++j) e = (ex - x * e) / j;
  return e;
}

double log_gamma_multi(int n, int m) {
  if (n < 1 || m < n) throw std::domain_error("log_gamma_multi: need m >= n >= 1");
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) sum += std::lgamma(static_cast<double>(m - i + 1));
  return sum;
}

double f_mmse(int m, int n, double x) {
  if (n == 0) {
    if (m < 1) throw std::domain_error("f_mmse: need m >= 1");
    if (!(x > 0.0)) throw std::domain_error("f_mmse: x must be > 0");
    return 0.0;
  }
  if (n < 0 || m < n) throw std::domain_error("f_mmse: need m >= n >= 0");
  if (!(x > 0.0)) throw std::domain_error("f_mmse: x must be > 0");

  const auto log_esum = log_esum_table(n + m - 1, x);
  const auto dets = psi_log_dets(m, n, log_esum);
  double log_abs = 0.0;
  const double mantissa = signed_sum(dets, 0.0, &log_abs);
  const double log_norm = log_gamma_multi(n, m) + log_gamma_multi(n, n);
  return mantissa * std::exp(log_abs - log_norm);
}

double f_mmse_exp_diff(int m, int n, double x) {
  if (n < 1 || m < n) throw std::domain_error("f_mmse_exp_diff: need m >= n >= 1");
  if (!(x > 0.0)) throw std::domain_error("f_mmse_exp_diff: x must be > 0");

  const auto log_esum = log_esum_table(n + m - 1, x);
  const double log_norm_m = log_gamma_multi(n, m) + log_gamma_multi(n, n);

  std::vector<SignedLogDet> terms = psi_log_dets(m, n, log_esum);
  for (auto& t : terms) t.log_abs -= log_norm_m;
  if (n >= 2) {
    const double log_norm_lower = log_gamma_multi(n - 1, m) + log_gamma_multi(n - 1, n - 1);
    auto lower = psi_log_dets(m, n - 1, log_esum);
    for (auto& t : lower) {
      t.sign = -t.sign;
      t.log_abs -= log_norm_lower;
      terms.push_back(t);
    }
  }
  double log_abs = 0.0;
  const double mantissa = signed_sum(terms, x, &log_abs);
  return mantissa * std::exp(log_abs);
}

}  // namespace mumimo
