#include "plcbound/verify.hpp"

#include "plcbound/analytic.hpp"
#include "plcbound/graph.hpp"
#include "plcbound/scheme.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace plcbound {

std::string format_double(double x, int precision) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

namespace {

Check timed(std::string id, std::string label, const std::function<void(Check&)>& body) {
  Check check;
  check.id = std::move(id);
  check.label = std::move(label);
  const auto start = std::chrono::steady_clock::now();
  body(check);
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

Check q_golden(const ReproductionOptions& opt) {
  return timed("q32-golden-ratio", "q(3,2) equals (sqrt(5)-1)/2 within 1e-9", [&](Check& c) {
    const double q = compute_q(BoundParams(3, 2)).q + opt.q_perturbation;
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    c.expected = format_double(golden);
    c.observed = format_double(q);
    c.pass = std::abs(q - golden) <= 1e-9;
  });
}

Check q54_quartic(const ReproductionOptions& opt) {
  return timed("q54-quartic-root", "q(5,4) in (0.724, 0.725) and a root of 1 - x - x^4", [&](Check& c) {
    const BoundParams params(5, 4);
    const QValue qv = compute_q(params);
    const double q = qv.q + opt.q_perturbation;
    const IntPolynomial p = poly_coeffs(params);
    const IntPolynomial quartic({1, -1, 0, 0, -1});
    const bool straddles = p.evaluate(exact_rational(qv.bracket_lo + opt.q_perturbation)) >= 0 &&
                           p.evaluate(exact_rational(qv.bracket_hi + opt.q_perturbation)) <= 0;
    c.expected = "0.724 < q < 0.725, p(x) = 1 - x - x^4";
    c.observed = "q = " + format_double(q) + ", p(x) = " + p.to_string();
    c.pass = q > 0.724 && q < 0.725 && p.coefficients() == quartic.coefficients() && straddles;
  });
}

Check lemma_sandwich() {
  return timed("lemma-sandwich", "6/7 t/s < q(s,t) <= t/s for all 0 < t < s <= 200", [](Check& c) {
    int failures = 0;
    int pairs = 0;
    std::string first_failure;
    for (int s = 2; s <= 200; ++s) {
      for (int t = 1; t < s; ++t) {
        ++pairs;
        if (!check_lemma_bounds(BoundParams(s, t)).ok()) {
          if (failures++ == 0) first_failure = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
        }
      }
    }
    c.expected = "all " + std::to_string(pairs) + " pairs inside the bounds";
    c.observed = std::to_string(pairs - failures) + " inside" +
                 (failures ? ", first failure " + first_failure : std::string());
    c.pass = failures == 0;
  });
}

Check g_positive() {
  return timed("g-positive", "g(v) > 0 for v = 0.001, 0.002, ..., 0.999", [](Check& c) {
    double min_g = INFINITY;
    double at = 0.0;
    for (int k = 1; k <= 999; ++k) {
      const double v = k / 1000.0;
      const double g = eval_g(v).g_value;
      if (g < min_g) {
        min_g = g;
        at = v;
      }
    }
    c.expected = "min g > 0";
    c.observed = "min g = " + format_double(min_g, 6) + " at v = " + format_double(at, 4);
    c.pass = min_g > 0.0;
  });
}

Check ratio_infimum(const ReproductionOptions& opt) {
  return timed("ratio-infimum", "inf q/(t/s) = 0.8598841287 within 1e-6; grid (s <= 200) > 6/7 and within 5e-3",
               [&](Check& c) {
                 const RatioReport r = ratio_scan(200);
                 const double limit = r.limit_min + opt.q_perturbation;
                 c.expected = "limit 0.8598841287, 6/7 < grid min <= limit + 5e-3";
                 c.observed = "limit " + format_double(limit, 11) + " at v = " +
                              format_double(r.limit_argmin_v, 9) + ", grid min " +
                              format_double(r.grid_min, 10) + " at (" + std::to_string(r.grid_min_s) +
                              "," + std::to_string(r.grid_min_t) + ")";
                 c.pass = std::abs(limit - 0.8598841287) <= 1e-6 && r.grid_min > kLemmaFactor &&
                          std::abs(r.grid_min - limit) <= 5e-3;
               });
}

Check exact_oracles(const ReproductionOptions& opt) {
  return timed("exact-oracles", "lambda, chi_ell and choosability on K3, C4, C5, K33; conjecture holds",
               [&](Check& c) {
                 EnumerationOptions eo;
                 eo.node_budget = opt.node_budget;
                 const Graph k3 = generate(Family::Complete, 3);
                 const Graph c4 = generate(Family::Cycle, 4);
                 const Graph c5 = generate(Family::Cycle, 5);
                 const Graph k33 = generate(Family::CompleteBipartite, 3, 3);
                 const int l1k3 = lambda_t(k3, 1, eo).value;
                 const int l2k3 = lambda_t(k3, 2, eo).value;
                 const int l2c5 = lambda_t(c5, 2, eo).value;
                 const int chik3 = chi_ell(k3, eo).chi_ell;
                 const int chic5 = chi_ell(c5, eo).chi_ell;
                 const int chic4 = chi_ell(c4, eo).chi_ell;
                 const bool k33_2 = is_s_choosable(k33, 2, eo).ok;
                 // lambda * chi_ell >= t * n, in integers.
                 const bool conjecture = l1k3 * chik3 >= 1 * 3 && l2k3 * chik3 >= 2 * 3 && l2c5 * chic5 >= 2 * 5;
                 c.expected = "l1(K3)=1 l2(K3)=2 l2(C5)=4 ch(K3)=3 ch(C5)=3 ch(C4)=2 K33 2-choosable=no conj=yes";
                 std::ostringstream o;
                 o << "l1(K3)=" << l1k3 << " l2(K3)=" << l2k3 << " l2(C5)=" << l2c5 << " ch(K3)=" << chik3
                   << " ch(C5)=" << chic5 << " ch(C4)=" << chic4 << " K33 2-choosable=" << (k33_2 ? "yes" : "no")
                   << " conj=" << (conjecture ? "yes" : "no");
                 c.observed = o.str();
                 c.pass = l1k3 == 1 && l2k3 == 2 && l2c5 == 4 && chik3 == 3 && chic5 == 3 && chic4 == 2 &&
                          !k33_2 && conjecture;
               });
}

Check derandomized_scheme(const ReproductionOptions& opt) {
  return timed("derandomized-scheme", "derandomized scheme reaches ceil(q n) on C5, K3 (s=3) and Petersen (s=4)",
               [&](Check& c) {
                 struct Case {
                   Graph g;
                   int t;
                   int s;
                   int required;
                 };
                 const Case cases[] = {
                     {generate(Family::Cycle, 5), 2, 3, 4},
                     {generate(Family::Complete, 3), 2, 3, 2},
                     {generate(Family::Petersen, 0), 3, 4, 7},
                 };
                 const int per_family = opt.quick ? 100 : 300;
                 int runs = 0;
                 int failures = 0;
                 int min_margin = 1 << 30;
                 for (const auto& cs : cases) {
                   for (int k = 0; k < per_family; ++k) {
                     const int palette = cs.t + k % (cs.t + 3);
                     const auto lists = random_lists(cs.g.order(), cs.t, palette, 1000 + static_cast<std::uint64_t>(k));
                     const SchemeOutcome out = derandomize(cs.g, lists, cs.s, opt.node_budget);
                     ++runs;
                     min_margin = std::min(min_margin, out.colored_count - cs.required);
                     const bool ok = out.colored_count >= cs.required && out.guarantee_met() &&
                                     out.expectation_monotone() && validate_partial(cs.g, lists, out.coloring).ok;
                     if (!ok) ++failures;
                   }
                 }
                 c.expected = "all runs reach the bound, monotone expectation, valid colorings";
                 c.observed = std::to_string(runs - failures) + "/" + std::to_string(runs) +
                              " runs pass, smallest margin over the bound " + std::to_string(min_margin);
                 c.pass = failures == 0;
               });
}

Check monte_carlo_rate(const ReproductionOptions& opt) {
  return timed("monte-carlo-rate", "C5, s=3, t=2, 10^4 trials: mean colored fraction within 0.02 of q(3,2)",
               [&](Check& c) {
                 const Graph c5 = generate(Family::Cycle, 5);
                 const auto lists = random_lists(5, 2, 4, 7);
                 const MonteCarloResult mc = monte_carlo(c5, lists, 3, 10000, 42, opt.node_budget);
                 const double q = compute_q(BoundParams(3, 2)).q + opt.q_perturbation;
                 c.expected = format_double(q) + " +- 0.02";
                 c.observed = format_double(mc.mean_fraction, 6) + " (stddev of mean " +
                              format_double(mc.stddev_of_mean, 3) + ")";
                 c.pass = std::abs(mc.mean_fraction - q) <= 0.02;
               });
}

Check polynomial_integrality() {
  return timed("polynomial-integrality",
               "p(x) = u^t f(x) has leading coefficient -1, constant u^t - (u-1)^t, sign change at the q bracket (1 < t < s <= 30)",
               [](Check& c) {
                 int pairs = 0;
                 int failures = 0;
                 for (int s = 3; s <= 30; ++s) {
                   for (int t = 2; t < s; ++t) {
                     ++pairs;
                     const BoundParams params(s, t);
                     const IntPolynomial p = poly_coeffs(params);
                     const QValue qv = compute_q(params);
                     const BigInt u = params.u();
                     const BigInt constant = boost::multiprecision::pow(u, static_cast<unsigned>(t)) -
                                             boost::multiprecision::pow(BigInt(u - 1), static_cast<unsigned>(t));
                     const bool ok = p.degree() == t && p.leading() == -1 && p.coefficient(0) == constant &&
                                     p.evaluate(exact_rational(qv.bracket_lo)) >= 0 &&
                                     p.evaluate(exact_rational(qv.bracket_hi)) <= 0;
                     if (!ok) ++failures;
                   }
                 }
                 c.expected = "all " + std::to_string(pairs) + " pairs";
                 c.observed = std::to_string(pairs - failures) + " pass";
                 c.pass = failures == 0;
               });
}

}  // namespace

std::vector<Check> run_reproduction_checks(const ReproductionOptions& options) {
  std::vector<Check> checks;
  checks.push_back(q_golden(options));
  checks.push_back(q54_quartic(options));
  checks.push_back(lemma_sandwich());
  checks.push_back(g_positive());
  checks.push_back(ratio_infimum(options));
  checks.push_back(exact_oracles(options));
  checks.push_back(derandomized_scheme(options));
  checks.push_back(monte_carlo_rate(options));
  checks.push_back(polynomial_integrality());
  return checks;
}

}  // namespace plcbound
