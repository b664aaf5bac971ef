#include "plcbound/analytic.hpp"

#include "plcbound/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace plcbound {

BoundParams::BoundParams(int s, int t) : s_(s), t_(t) {
  if (t <= 0 || s <= t) {
    throw InvalidParameters("require s > t > 0, got s=" + std::to_string(s) +
                            ", t=" + std::to_string(t));
  }
}

double eval_f(const BoundParams& params, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("eval_f: x must lie in [0, 1]");
  }
  const double u = params.u();
  const double base = 1.0 - (1.0 - x) / u;
  return 1.0 - x - std::pow(base, params.t());
}

QValue compute_q(const BoundParams& params, double tol) {
  if (!(tol > 0.0)) {
    throw InvalidParameters("compute_q: tolerance must be positive");
  }
  double lo = 0.0;
  double hi = 1.0;
  int steps = 0;
  // Keep splitting until the bracket is narrow and strictly inside (0, 1).
  while (steps < kMaxBisectionSteps && (hi - lo > tol || lo <= 0.0 || hi >= 1.0)) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (eval_f(params, mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++steps;
  }
  const double q = lo + 0.5 * (hi - lo);
  return QValue{params, q, lo, hi, eval_f(params, q), steps};
}

LemmaBounds check_lemma_bounds(const BoundParams& params) {
  const QValue qv = compute_q(params, kDefaultRootTol);
  const IntPolynomial p = scaled_f_polynomial(params);
  const BigInt s = params.s();
  const BigInt t = params.t();

  LemmaBounds out{};
  out.q = qv.q;
  out.upper = params.v();
  out.lower = kLemmaFactor * out.upper;
  out.lower_ok = p.sign_at(kLemmaNum * t, kLemmaDen * s) > 0;
  out.upper_ok = p.sign_at(t, s) <= 0;
  return out;
}

LemmaCheck eval_g(double v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError("eval_g: v must lie in (0, 1)");
  }
  const double cv = kLemmaFactor * v;
  const double g = std::log1p(-cv) + v * (1.0 - cv) / (1.0 - v);
  return LemmaCheck{v, kLemmaFactor, g};
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

double IntPolynomial::evaluate(double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->convert_to<long double>();
  }
  return static_cast<double>(acc);
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + BigRational(*it);
  }
  return acc;
}

int IntPolynomial::sign_at(const BigInt& num, const BigInt& den) const {
  if (den <= 0) throw InvalidParameters("sign_at: denominator must be positive");
  // Homogeneous Horner: sum_k c_k num^k den^(deg-k).
  BigInt acc = coeffs_.back();
  BigInt den_pow = 1;
  for (int k = degree() - 1; k >= 0; --k) {
    den_pow *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(k)] * den_pow;
  }
  return acc.sign();
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

IntPolynomial scaled_f_polynomial(const BoundParams& params) {
  const int t = params.t();
  const BigInt u = params.u();
  const BigInt u_minus_1 = u - 1;

  // -(u - 1 + x)^t = -sum_k C(t,k) (u-1)^(t-k) x^k
  std::vector<BigInt> coeffs(static_cast<std::size_t>(t) + 1);
  std::vector<BigInt> pow_um1(static_cast<std::size_t>(t) + 1);
  pow_um1[0] = 1;
  for (int k = 1; k <= t; ++k) pow_um1[k] = pow_um1[k - 1] * u_minus_1;
  BigInt binom = 1;
  for (int k = 0; k <= t; ++k) {
    coeffs[k] = -binom * pow_um1[t - k];
    binom = binom * (t - k) / (k + 1);
  }
  // + u^t (1 - x)
  const BigInt u_pow_t = boost::multiprecision::pow(u, static_cast<unsigned>(t));
  coeffs[0] += u_pow_t;
  coeffs[1] -= u_pow_t;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial poly_coeffs(const BoundParams& params) {
  if (params.t() <= 1) {
    throw InvalidParameters("poly_coeffs: the integer-root argument needs t > 1");
  }
  return scaled_f_polynomial(params);
}

BigRational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("exact_rational: value is not finite");
  if (x == 0.0) return BigRational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  constexpr int kDigits = std::numeric_limits<double>::digits;
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, kDigits));
  BigRational out{BigInt(scaled)};
  const int shift = exp - kDigits;
  const BigInt two_pow = BigInt(1) << std::abs(shift);
  if (shift >= 0) {
    out *= BigRational(two_pow);
  } else {
    out /= BigRational(two_pow);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ratio infimum

double limit_w(double v) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("limit_w: v must lie in (0, 1)");
  const double k = v / (1.0 - v);
  // h(w) = ln w + k w is increasing, -inf at 0+, positive at 1.
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kMaxBisectionSteps; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (std::log(mid) + k * mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

double limit_ratio(double v) { return (1.0 - limit_w(v)) / v; }

namespace {

struct Minimum {
  double arg;
  double value;
};

Minimum minimize_limit_curve() {
  constexpr int kCoarse = 1000;
  int best = 1;
  double best_value = limit_ratio(1.0 / kCoarse);
  for (int k = 2; k < kCoarse; ++k) {
    const double r = limit_ratio(static_cast<double>(k) / kCoarse);
    if (r < best_value) {
      best_value = r;
      best = k;
    }
  }
  double a = std::max(1e-6, static_cast<double>(best - 1) / kCoarse);
  double b = std::min(1.0 - 1e-6, static_cast<double>(best + 1) / kCoarse);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = limit_ratio(c);
  double fd = limit_ratio(d);
  while (b - a > 1e-9) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = limit_ratio(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = limit_ratio(d);
    }
  }
  const double arg = 0.5 * (a + b);
  return Minimum{arg, limit_ratio(arg)};
}

}  // namespace

RatioReport ratio_scan(int s_max, unsigned threads) {
  if (s_max < 3) throw InvalidParameters("ratio_scan: s_max must be at least 3");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::vector<RatioEntry>> rows(static_cast<std::size_t>(s_max) + 1);
  std::atomic<int> next_s{2};
  auto worker = [&] {
    for (int s = next_s++; s <= s_max; s = next_s++) {
      auto& row = rows[static_cast<std::size_t>(s)];
      row.reserve(static_cast<std::size_t>(s) - 1);
      for (int t = 1; t < s; ++t) {
        const BoundParams params(s, t);
        const double q = compute_q(params).q;
        row.push_back(RatioEntry{s, t, q, q / params.v()});
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  RatioReport report;
  report.grid_min = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    for (const auto& entry : row) {
      if (entry.ratio < report.grid_min) {
        report.grid_min = entry.ratio;
        report.grid_min_s = entry.s;
        report.grid_min_t = entry.t;
      }
      report.grid.push_back(entry);
    }
  }
  const Minimum limit = minimize_limit_curve();
  report.limit_min = limit.value;
  report.limit_argmin_v = limit.arg;
  return report;
}

}  // namespace plcbound
