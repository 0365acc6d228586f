#include "etpa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace etpa::specfun {

namespace {

struct Rule {
  std::vector<double> x;  // nodes on [-1,1]
  std::vector<double> w;
};

// Gauss-Legendre nodes via Newton iteration on P_n.  Converges in a handful
// of steps from the Chebyshev-like initial guess.
Rule make_rule(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // evaluate P_n(x) and P'_n(x) by the three-term recurrence
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // one clean-up pass so the weight uses a converged node
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.x[i] = -x;  // ascending order
    r.w[i] = w;
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

const Rule& rule(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

double apply_rule(const std::function<double(double)>& f, const Rule& r,
                  double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
  return s * h;
}

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

// value from the higher-order rule, error from the order pair difference
Segment eval_segment(const std::function<double(double)>& f, double a, double b) {
  const Rule& lo = rule(15);
  const Rule& hi = rule(31);
  double v1 = apply_rule(f, lo, a, b);
  double v2 = apply_rule(f, hi, a, b);
  return {a, b, v2, std::abs(v2 - v1)};
}

}  // namespace

void gauss_legendre(double a, double b, int n,
                    std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 2 || n > 64) throw std::invalid_argument("gauss_legendre: order out of range");
  const Rule& r = rule(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    nodes.push_back(c + h * r.x[i]);
    weights.push_back(h * r.w[i]);
  }
}

double integrate_adaptive(const std::function<double(double)>& f,
                          const QuadratureSpec& spec) {
  if (!(spec.abs_tol >= 0.0) || !(spec.rel_tol >= 0.0) ||
      !(spec.abs_tol > 0.0 || spec.rel_tol > 0.0))
    throw std::invalid_argument("integrate_adaptive: tolerances must be nonnegative, one positive");
  if (spec.max_subdivisions < 1)
    throw std::invalid_argument("integrate_adaptive: max_subdivisions must be >= 1");

  // map everything onto a finite parameter interval
  std::function<double(double)> g;
  double ta, tb;
  switch (spec.domain) {
    case Domain::finite:
      if (!(spec.b > spec.a)) throw std::invalid_argument("integrate_adaptive: empty interval");
      g = f;
      ta = spec.a;
      tb = spec.b;
      break;
    case Domain::half_infinite_up: {
      const double a0 = spec.a;
      g = [&f, a0](double t) {
        const double u = 1.0 - t;
        return f(a0 + t / u) / (u * u);
      };
      ta = 0.0;
      tb = 1.0;
      break;
    }
    case Domain::infinite:
      g = [&f](double t) {
        const double u = 1.0 - t * t;
        return f(t / u) * (1.0 + t * t) / (u * u);
      };
      ta = -1.0;
      tb = 1.0;
      break;
    default:
      throw std::invalid_argument("integrate_adaptive: bad domain");
  }

  // breakpoints, mapped into parameter space
  std::vector<double> cuts{ta, tb};
  for (double x : spec.breakpoints) {
    double t;
    switch (spec.domain) {
      case Domain::finite:
        t = x;
        break;
      case Domain::half_infinite_up:
        if (x <= spec.a) continue;
        t = (x - spec.a) / (1.0 + x - spec.a);
        break;
      default:  // infinite
        t = (x == 0.0) ? 0.0 : (std::sqrt(1.0 + 4.0 * x * x) - 1.0) / (2.0 * x);
        break;
    }
    if (t > ta && t < tb) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment> heap;
  double total = 0.0, total_err = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s = eval_segment(g, cuts[i], cuts[i + 1]);
    total += s.value;
    total_err += s.err;
    heap.push(s);
  }

  auto done = [&]() {
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return total_err <= tol;
  };

  int splits = 0;
  while (!done()) {
    if (splits >= spec.max_subdivisions || heap.empty()) {
      if (std::isnan(total))
        throw QuadratureError("integrate_adaptive: integrand produced NaN", total, total_err);
      throw QuadratureError("integrate_adaptive: subdivision budget exhausted", total, total_err);
    }
    Segment worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // interval no longer splittable in double precision; keep its estimate
      continue;
    }
    Segment l = eval_segment(g, worst.a, mid);
    Segment r = eval_segment(g, mid, worst.b);
    total += l.value + r.value - worst.value;
    total_err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
    ++splits;
  }
  if (std::isnan(total))
    throw QuadratureError("integrate_adaptive: integrand produced NaN", total, total_err);
  return total;
}

}  // namespace etpa::specfun
