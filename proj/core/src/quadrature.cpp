#include "xyefp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace xyefp {

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch is overkill for fixed orders; Newton on P_n with the
// Tricomi-style initial guess converges in a handful of iterations.
GaussRule build_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P'_n(x)
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= order; ++n) {
        double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

const GaussRule& rule_for(int order) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

Complex panel_value(const std::function<Complex(double)>& f, double a,
                    double b, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

// Recursive bisection; accepts a panel when |whole - (left+right)| is within
// its length-proportional share of the global tolerance, or has reached the
// round-off floor of the panel values (sharp peaks otherwise demand error
// below machine precision on the panels that straddle them).
void refine(const std::function<Complex(double)>& f, double a, double b,
            Complex whole, const GaussRule& rule, double tol_per_length,
            int depth, QuadratureResult& out) {
  const Complex left = panel_value(f, a, 0.5 * (a + b), rule);
  const Complex right = panel_value(f, 0.5 * (a + b), b, rule);
  const double err = std::abs(whole - left - right);
  const double floor =
      1e-15 * (std::abs(left) + std::abs(right) + std::abs(whole));
  if (err <= tol_per_length * (b - a) + floor || depth <= 0) {
    out.value += left + right;
    out.error_estimate += err;
    return;
  }
  refine(f, a, 0.5 * (a + b), left, rule, tol_per_length, depth - 1, out);
  refine(f, 0.5 * (a + b), b, right, rule, tol_per_length, depth - 1, out);
}

}  // namespace

const std::vector<double>& gauss_nodes(int order) {
  return rule_for(order).nodes;
}

const std::vector<double>& gauss_weights(int order) {
  return rule_for(order).weights;
}

QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  return integrate_panels(f, {a, b}, spec);
}

QuadratureResult integrate_panels(const std::function<Complex(double)>& f,
                                  const std::vector<double>& edges,
                                  const QuadratureSpec& spec) {
  const GaussRule& rule = rule_for(spec.order);
  const double total = edges.back() - edges.front();
  QuadratureResult out;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    if (b <= a) continue;
    const Complex whole = panel_value(f, a, b, rule);
    // budget half the tolerance so the accumulated estimate clears the
    // convergence check with headroom
    refine(f, a, b, whole, rule, 0.5 * spec.tol / total, spec.max_depth, out);
  }
  // convergence is judged against the accumulated estimate: a single
  // depth-exhausted panel with negligible discrepancy is not a failure
  out.converged =
      out.error_estimate <= spec.tol + 1e-14 * std::abs(out.value);
  return out;
}

QuadratureResult integrate_circle(const std::function<Complex(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  double frequency_hint,
                                  const QuadratureSpec& spec) {
  std::vector<double> pieces{-pi};
  for (double b : breakpoints)
    if (b > -pi && b < pi) pieces.push_back(b);
  pieces.push_back(pi);
  std::sort(pieces.begin(), pieces.end());

  const int splits = std::max(
      spec.min_subpanels,
      static_cast<int>(std::ceil(std::abs(frequency_hint) / 4.0)));
  std::vector<double> edges;
  for (std::size_t p = 0; p + 1 < pieces.size(); ++p) {
    for (int s = 0; s < splits; ++s)
      edges.push_back(pieces[p] + (pieces[p + 1] - pieces[p]) * s / splits);
  }
  edges.push_back(pi);

  QuadratureResult out = integrate_panels(f, edges, spec);
  out.value /= 2.0 * pi;
  out.error_estimate /= 2.0 * pi;
  // the tolerance refers to the normalized integral
  out.converged =
      out.error_estimate <= spec.tol + 1e-14 * std::abs(out.value);
  return out;
}

Complex integrate_circle_or_throw(const std::function<Complex(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  double frequency_hint,
                                  const QuadratureSpec& spec) {
  QuadratureResult r = integrate_circle(f, breakpoints, frequency_hint, spec);
  if (!r.converged)
    throw QuadratureError("quadrature did not converge (estimate " +
                              std::to_string(r.error_estimate) + ")",
                          r.error_estimate);
  return r.value;
}

}  // namespace xyefp
