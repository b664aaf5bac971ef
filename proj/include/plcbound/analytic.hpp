#pragma once

// Numerics for the partial list coloring bound
//
//   f_{s,t}(x) = 1 - x - [1 - (1 - x) / (s - t)]^t
//
// f is strictly decreasing on (0, 1] with f(0) > 0 and f(1) = -1, so it has a
// single root q_{s,t} in (0, 1). q_{s,t} * n vertices of an s-choosable graph
// can always be colored from lists of size t.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace plcbound {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr int kMaxBisectionSteps = 200;

/// 6/7, the uniform factor in 6/7 * t/s < q_{s,t}.
inline constexpr int kLemmaNum = 6;
inline constexpr int kLemmaDen = 7;
inline constexpr double kLemmaFactor = static_cast<double>(kLemmaNum) / kLemmaDen;

/// Augmented list size s and given list size t, with s > t > 0.
class BoundParams {
 public:
  /// Throws InvalidParameters unless s > t > 0.
  BoundParams(int s, int t);

  int s() const noexcept { return s_; }
  int t() const noexcept { return t_; }
  /// Number of fresh colors added to each list.
  int u() const noexcept { return s_ - t_; }
  double v() const noexcept { return static_cast<double>(t_) / s_; }

  friend bool operator==(const BoundParams&, const BoundParams&) = default;

 private:
  int s_;
  int t_;
};

struct QValue {
  BoundParams params;
  double q;
  double bracket_lo;
  double bracket_hi;
  /// f(q)
  double residual;
  int iterations;
};

/// f_{s,t}(x) for x in [0, 1]. Throws DomainError outside that interval.
double eval_f(const BoundParams& params, double x);

/// Bisection on [0, 1]. The returned bracket satisfies f(lo) >= 0 >= f(hi),
/// 0 < lo <= q <= hi < 1 and hi - lo <= tol (unless tol is below the
/// resolution of double, in which case the loop stops after kMaxBisectionSteps).
QValue compute_q(const BoundParams& params, double tol = kDefaultRootTol);

struct LemmaBounds {
  double q;
  double lower;  // 6/7 * t/s
  double upper;  // t/s
  /// f(lower) > 0, decided in exact arithmetic.
  bool lower_ok;
  /// f(upper) <= 0, decided in exact arithmetic. Equality holds for t = 1.
  bool upper_ok;

  bool ok() const noexcept { return lower_ok && upper_ok; }
};

/// Checks 6/7 * t/s < q_{s,t} <= t/s. Because f is decreasing, each side is
/// decided by the exact sign of f at the bound, which stays correct at t = 1
/// where q = t/s exactly.
LemmaBounds check_lemma_bounds(const BoundParams& params);

struct LemmaCheck {
  double v;
  double c;
  double g_value;
};

/// g(v) = ln(1 - c v) + v (1 - c v) / (1 - v) with c = 6/7. Throws DomainError unless 0 < v < 1.
LemmaCheck eval_g(double v);

/// Dense integer polynomial; coefficient k multiplies x^k.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const BigInt& leading() const { return coeffs_.back(); }

  /// Floating point Horner evaluation.
  double evaluate(double x) const;
  BigRational evaluate(const BigRational& x) const;
  /// Sign of p(num/den), den > 0, in integer arithmetic.
  int sign_at(const BigInt& num, const BigInt& den) const;

  /// e.g. "1 - x - x^2"
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// p(x) = u^t f_{s,t}(x) = u^t (1 - x) - (u - 1 + x)^t, expanded exactly.
/// Requires t > 1; throws InvalidParameters otherwise.
IntPolynomial poly_coeffs(const BoundParams& params);

/// Same expansion without the t > 1 restriction (t = 1 gives 1 - s x).
IntPolynomial scaled_f_polynomial(const BoundParams& params);

/// Exact value of a finite double.
BigRational exact_rational(double x);

struct RatioEntry {
  int s;
  int t;
  double q;
  double ratio;  // q / (t/s)
};

struct RatioReport {
  std::vector<RatioEntry> grid;
  double grid_min = 0.0;
  int grid_min_s = 0;
  int grid_min_t = 0;
  double limit_min = 0.0;
  double limit_argmin_v = 0.0;
};

/// Root in (0, 1) of ln w = -v w / (1 - v), the s -> infinity form of
/// f_{s,t}(1 - w) = 0 with t = v s.
double limit_w(double v);

/// (1 - w(v)) / v, the limiting value of q_{s,t} / (t/s).
double limit_ratio(double v);

/// Scans every 0 < t < s <= s_max and minimizes the limit curve by golden
/// section search. threads == 0 picks hardware concurrency.
RatioReport ratio_scan(int s_max, unsigned threads = 0);

}  // namespace plcbound
