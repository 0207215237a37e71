#include "tnet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tnet {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// ---- step-consistent explicit sum -------------------------------------------

std::vector<NetworkHistory> explicit_histories(const HistoryLog& log, const MaterialSpec& spec) {
  validate(spec);
  if (log.empty()) throw std::invalid_argument("history log is empty");
  const std::size_t steps = log.size() - 1;
  std::vector<DefState> states;
  states.reserve(log.size());
  for (const LogEntry& e : log) states.push_back(make_state(e.F, e.t, e.T));

  std::vector<NetworkHistory> out;
  for (const NetworkSpec& net : spec.networks) {
    std::vector<SurvivalUpdate> u(steps);
    for (std::size_t j = 0; j < steps; ++j) {
      const double dt = log[j + 1].t - log[j].t;
      if (dt < 0.0) throw std::invalid_argument("history log times must be non-decreasing");
      u[j] = survival(net.kinetics, log[j].T, log[j + 1].T, dt);
    }
    // survival from the end of step j to the end of the log
    std::vector<double> after(steps + 1, 1.0);
    for (std::size_t j = steps; j-- > 0;) after[j] = after[j + 1] * u[j].e;

    NetworkHistory h{after[0], zero_terms(net.model)};
    for (std::size_t j = 0; j < steps; ++j) {
      if (u[j].w == 0.0) continue;
      KernelTerms a = kernel_A(net.model, states[j]);
      a.axpy(1.0, kernel_A(net.model, states[j + 1]));
      h.H.axpy(0.5 * u[j].w * after[j + 1], a);
    }
    out.push_back(std::move(h));
  }
  return out;
}

SymTensor2 explicit_stress(const HistoryLog& log, const MaterialSpec& spec) {
  MaterialState s;
  s.networks = explicit_histories(log, spec);
  s.last = make_state(log.back().F, log.back().t, log.back().T);
  return evaluate(s, spec).sigma;
}

// ---- quadrature of the hereditary integral ----------------------------------

Path piecewise_linear(const HistoryLog& log) {
  if (log.empty()) throw std::invalid_argument("history log is empty");
  return [log](double t) {
    if (t <= log.front().t) return PathPoint{log.front().F, log.front().T};
    for (std::size_t j = 1; j < log.size(); ++j) {
      // the last entry at or after t closes the interval containing t
      if (t < log[j].t || (t == log[j].t && (j + 1 == log.size() || log[j + 1].t > t))) {
        const double dt = log[j].t - log[j - 1].t;
        const double x = dt > 0.0 ? (t - log[j - 1].t) / dt : 1.0;
        return PathPoint{log[j - 1].F + x * (log[j].F - log[j - 1].F),
                         log[j - 1].T + x * (log[j].T - log[j - 1].T)};
      }
    }
    return PathPoint{log.back().F, log.back().T};
  };
}

namespace {

struct Node {
  DefState state;
  double weight = 0.0;
  double T = 0.0;
};

struct Panel {
  double a = 0.0, b = 0.0;
  std::vector<Node> nodes;
};

std::vector<Panel> build_panels(const Path& path, double t, const QuadratureRule& rule,
                                bool with_spectrum) {
  if (rule.breakpoints.empty()) throw std::invalid_argument("quadrature rule needs a start time");
  const double start = rule.breakpoints.front();
  std::vector<double> cuts{start};
  for (double b : rule.breakpoints)
    if (b > start && b < t) cuts.push_back(b);
  if (t > start) cuts.push_back(t);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> x, w;
  gauss_legendre(rule.points, x, w);
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const int m = std::max(1, rule.panels_per_interval);
    for (int p = 0; p < m; ++p) {
      Panel pan;
      pan.a = cuts[i] + (cuts[i + 1] - cuts[i]) * p / m;
      pan.b = (p + 1 == m) ? cuts[i + 1] : cuts[i] + (cuts[i + 1] - cuts[i]) * (p + 1) / m;
      const double half = 0.5 * (pan.b - pan.a), mid = 0.5 * (pan.a + pan.b);
      for (std::size_t k = 0; k < x.size(); ++k) {
        const double s = mid + half * x[k];
        const PathPoint pp = path(s);
        Node n{make_state(pp.F, s, pp.T), half * w[k], pp.T};
        if (with_spectrum) ensure_spectrum(n.state);
        pan.nodes.push_back(std::move(n));
      }
      panels.push_back(std::move(pan));
    }
  }
  return panels;
}

// integral of k(T(u)) over [a, b] by the given rule
double exposure(const Path& path, const KineticsSpec& kin, double a, double b,
                const std::vector<double>& x, const std::vector<double>& w) {
  if (b <= a) return 0.0;
  if (const auto* c = std::get_if<ConstantRate>(&kin)) return c->k * (b - a);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += w[k] * rate(kin, path(mid + half * x[k]).T);
  return half * acc;
}

// Surviving density gamma(t, s) at every node and the original fraction.
struct Weights {
  std::vector<std::vector<double>> density;  // [panel][node]
  double gamma0 = 1.0;
};

Weights survival_weights(const Path& path, const KineticsSpec& kin, const std::vector<Panel>& panels,
                         const QuadratureRule& rule) {
  Weights out;
  out.density.resize(panels.size());
  if (is_permanent(kin)) {
    for (std::size_t p = 0; p < panels.size(); ++p) out.density[p].assign(panels[p].nodes.size(), 0.0);
    return out;
  }
  std::vector<double> x, w;
  gauss_legendre(rule.points, x, w);
  double tail = 0.0;  // exposure from the end of the current panel to t
  for (std::size_t p = panels.size(); p-- > 0;) {
    const Panel& pan = panels[p];
    for (const Node& n : pan.nodes) {
      const double X = tail + exposure(path, kin, n.state.t, pan.b, x, w);
      out.density[p].push_back(rate(kin, n.T) * std::exp(-X));
    }
    tail += exposure(path, kin, pan.a, pan.b, x, w);
  }
  out.gamma0 = std::exp(-tail);
  return out;
}

template <typename Result, typename Original, typename Born, typename Volumetric>
Result integrate(const Path& path, const MaterialSpec& spec, double t, const QuadratureRule& rule,
                 Original original, Born born, Volumetric volumetric) {
  validate(spec);
  const PathPoint now_pt = path(t);
  DefState now = make_state(now_pt.F, t, now_pt.T);
  const bool spectral = needs_spectrum(spec);
  if (spectral) ensure_spectrum(now);
  const std::vector<Panel> panels = build_panels(path, t, rule, spectral);

  Result total{};
  for (const NetworkSpec& net : spec.networks) {
    const Weights g = survival_weights(path, net.kinetics, panels, rule);
    total += g.gamma0 * original(net.model, now);
    if (is_permanent(net.kinetics)) continue;
    for (std::size_t p = 0; p < panels.size(); ++p)
      for (std::size_t k = 0; k < panels[p].nodes.size(); ++k) {
        const Node& n = panels[p].nodes[k];
        total += (n.weight * g.density[p][k]) * born(net.model, now, n.state);
      }
  }
  if (spec.volumetric) total += volumetric(*spec.volumetric, now.J);
  return total;
}

}  // namespace

SymTensor2 quadrature_stress(const Path& path, const MaterialSpec& spec, double t,
                             const QuadratureRule& rule) {
  return integrate<SymTensor2>(
      path, spec, t, rule, [](const ModelSpec& m, const DefState& s) { return hyper_stress(m, s); },
      [](const ModelSpec& m, const DefState& a, const DefState& b) { return relative_stress(m, a, b); },
      [](const VolumetricSpec& v, double J) { return volumetric_stress(v, J); });
}

double quadrature_energy(const Path& path, const MaterialSpec& spec, double t,
                         const QuadratureRule& rule) {
  return integrate<double>(
      path, spec, t, rule, [](const ModelSpec& m, const DefState& s) { return hyper_energy(m, s); },
      [](const ModelSpec& m, const DefState& a, const DefState& b) { return relative_energy(m, a, b); },
      [](const VolumetricSpec& v, double J) { return volumetric_energy(v, J); });
}

std::vector<DissipationSample> dissipation_check(const HistoryLog& log, const MaterialSpec& spec,
                                                 int points) {
  const Path path = piecewise_linear(log);
  QuadratureRule rule;
  for (const LogEntry& e : log) rule.breakpoints.push_back(e.t);
  rule.points = points;

  std::vector<DissipationSample> out;
  for (std::size_t j = 1; j < log.size(); ++j) {
    const double dt = log[j].t - log[j - 1].t;
    if (dt <= 0.0) continue;
    const double tm = 0.5 * (log[j - 1].t + log[j].t);
    const Tensor2 F = path(tm).F;
    const Tensor2 L = (1.0 / dt) * (log[j].F - log[j - 1].F) * inverse(F);
    const SymTensor2 sigma = quadrature_stress(path, spec, tm, rule);
    DissipationSample d;
    d.t = tm;
    d.power = det(F) * ddot(sigma, sym(L));
    const double h = 1e-3 * dt;
    auto W = [&](double s) { return quadrature_energy(path, spec, s, rule); };
    const double dW = (W(tm - 2 * h) - 8 * W(tm - h) + 8 * W(tm + h) - W(tm + 2 * h)) / (12 * h);
    d.dissipation = d.power - dW;
    out.push_back(d);
  }
  return out;
}

}  // namespace tnet
