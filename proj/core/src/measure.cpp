#include <cvxlab/measure.hpp>
#include <cvxlab/tolerances.hpp>

#include <algorithm>
#include <cmath>

namespace cvxlab {
namespace {

// Lower incomplete gamma for integer a = i+1: integral of u^i e^-u over
// [0, w]. Series near zero, closed form otherwise; both stable for i <= 4.
double gamma_lower_int(int i, double w) {
  if (w <= 0) return 0.0;
  if (w < 1.0) {
    // w^(i+1) e^-w sum_k w^k / ((i+1)(i+2)...(i+1+k))
    double term = 1.0 / (i + 1.0);
    double sum = term;
    for (int k = 1; k < 60; ++k) {
      term *= w / (i + 1.0 + k);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return std::pow(w, i + 1) * std::exp(-w) * sum;
  }
  double fact = 1.0;
  for (int k = 2; k <= i; ++k) fact *= k;
  double partial = 0.0, wp = 1.0, kfact = 1.0;
  for (int k = 0; k <= i; ++k) {
    if (k > 0) {
      wp *= w;
      kfact *= k;
    }
    partial += wp / kfact;
  }
  return fact * (1.0 - std::exp(-w) * partial);
}

double factorial(int i) {
  double f = 1.0;
  for (int k = 2; k <= i; ++k) f *= k;
  return f;
}

// integral over [a, b] (b possibly +inf) of e^-t * sum_i coeffs[i] (t-a)^i.
double integrate_against_exp(const std::vector<double>& coeffs, double a,
                             double b) {
  double scale = std::exp(-a);
  double total = 0.0;
  if (std::isinf(b)) {
    for (size_t i = 0; i < coeffs.size(); ++i)
      total += coeffs[i] * factorial(static_cast<int>(i));
  } else {
    double w = b - a;
    for (size_t i = 0; i < coeffs.size(); ++i)
      total += coeffs[i] * gamma_lower_int(static_cast<int>(i), w);
  }
  return scale * total;
}

std::vector<double> breakpoints(const Fn& f) {
  const double tol = geom_tol();
  const int n = f.ambient_dim();
  std::vector<double> hs;
  for (const Vec& v : f.epigraph().vertices()) hs.push_back(v[n]);
  std::sort(hs.begin(), hs.end());
  std::vector<double> out;
  for (double h : hs)
    if (out.empty() || h - out.back() > tol * (1.0 + std::abs(h)))
      out.push_back(h);
  return out;
}

}  // namespace

double unit_ball_volume(int n) {
  // w_n = pi^{n/2} / Gamma(n/2 + 1)
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

MassResult exp_integral(const Fn& f) {
  MassResult out;
  out.kind = integrability(f);
  out.moment = zero_vec(f.ambient_dim());
  if (out.kind != MassKind::kFinite) return out;

  const int n = f.ambient_dim();
  std::vector<double> bp = breakpoints(f);

  // Level-set volumes are polynomials of degree <= n between breakpoints and
  // on the final unbounded interval; first moments have degree <= n+1. One
  // shared node set of n+2 points fits both exactly.
  const int nodes_per_interval = n + 2;
  double total = 0.0;
  Vec moment_total = zero_vec(n);

  for (size_t k = 0; k < bp.size(); ++k) {
    double a = bp[k];
    bool tail = (k + 1 == bp.size());
    double b = tail ? a + 1.0 : bp[k + 1];
    std::vector<double> ts = chebyshev_nodes(a, b, nodes_per_interval);
    std::sort(ts.begin(), ts.end());
    std::vector<double> vols(ts.size());
    std::vector<Vec> moms(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
      Polyhedron g = f.level_set(ts[i]);
      vols[i] = volume(g);
      moms[i] = moment(g);
    }
    double upper = tail ? kInf : b;
    total += integrate_against_exp(interpolate_shifted(ts, vols, a), a, upper);
    for (int c = 0; c < n; ++c) {
      std::vector<double> mc(ts.size());
      for (size_t i = 0; i < ts.size(); ++i) mc[i] = moms[i][c];
      moment_total[c] +=
          integrate_against_exp(interpolate_shifted(ts, mc, a), a, upper);
    }
  }

  out.value = total;
  out.moment = moment_total;
  if (!(out.value > 0.0)) out.kind = MassKind::kZero;
  return out;
}

Vec centroid(const Fn& f) {
  MassResult m = exp_integral(f);
  if (m.kind != MassKind::kFinite) throw NotIntegrable();
  return m.moment / m.value;
}

bool fradelizi_check(const Fn& f) {
  MassResult m = exp_integral(f);
  if (m.kind != MassKind::kFinite) throw NotIntegrable();
  if ((m.moment / m.value).norm() > centroid_tol()) throw NotCentered();
  const int n = f.ambient_dim();
  double sup_log = -f.inf_value();           // log sup e^{-phi}
  double at0_log = -f.evaluate(zero_vec(n));  // log f(0)
  return sup_log <= at0_log + n + 1e-9 * (1.0 + std::abs(at0_log));
}

ProductReport product(const Fn& f, TransformTag tag,
                      const BoundConstants& constants) {
  ProductReport report;
  report.transform = tag;
  report.tags = classify(f);

  const int n = f.ambient_dim();
  if (!report.tags.zero_in_int_dom)
    throw IllPositioned("0 must be interior to the domain");
  if (tag != TransformTag::kLegendre && !report.tags.is_cvx0)
    throw IllPositioned("polarity-type products need a geometric function");

  Fn dual = apply(tag, f);
  report.mass_primal = exp_integral(f);
  report.mass_dual = exp_integral(dual);

  if (report.mass_primal.kind == MassKind::kFinite &&
      report.mass_dual.kind == MassKind::kFinite) {
    if (tag == TransformTag::kGauge)
      report.product = report.mass_primal.value / report.mass_dual.value;
    else
      report.product = report.mass_primal.value * report.mass_dual.value;
  }

  if (report.product) {
    double value = *report.product;
    double wn = unit_ball_volume(n);
    auto add = [&](const std::string& name, double lhs, double rhs,
                   bool evaluated) {
      report.bounds_check.push_back(
          {name, lhs, rhs, evaluated, !evaluated || lhs <= rhs});
    };
    switch (tag) {
      case TransformTag::kLegendre: {
        add("legendre_upper", value, std::pow(2.0 * M_PI, n), true);
        double lower = constants.legendre_lower_c
                           ? std::pow(2.0 * M_PI / *constants.legendre_lower_c, n)
                           : 0.0;
        add("legendre_lower", lower, value,
            constants.legendre_lower_c.has_value());
        break;
      }
      case TransformTag::kPolarity: {
        double upper = std::pow(factorial(n) * wn, 2);
        if (constants.polarity_upper_C)
          add("polarity_upper", value,
              upper * (1.0 + *constants.polarity_upper_C / n), true);
        else
          add("polarity_upper_leading_factor", value, upper, false);
        double c = constants.polarity_lower_c.value_or(0.0);
        add("polarity_lower", std::pow(c, n) * wn * wn, value,
            constants.polarity_lower_c.has_value());
        break;
      }
      case TransformTag::kGauge: {
        double cn = constants.gauge_c_n.value_or(0.0);
        add("gauge_upper", value, cn, constants.gauge_c_n.has_value());
        add("gauge_lower", cn > 0 ? 1.0 / cn : 0.0, value,
            constants.gauge_c_n.has_value());
        break;
      }
    }
  }
  return report;
}

}  // namespace cvxlab
