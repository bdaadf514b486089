#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace corenet {

struct ForecastModel {
  int p = 0, d = 0, q = 0;
  std::vector<double> ar;   // alpha_1..alpha_p
  std::vector<double> ma;   // beta_1..beta_q
  double intercept = 0.0;
  std::vector<double> residuals;
  double aic = std::numeric_limits<double>::infinity();
  bool fallback = false;    // estimation fell back to initialization / mean
};

namespace detail {

inline std::vector<double> difference(const std::vector<double>& y, int d) {
  std::vector<double> z = y;
  for (int r = 0; r < d; ++r) {
    std::vector<double> next;
    for (std::size_t i = 1; i < z.size(); ++i) next.push_back(z[i] - z[i - 1]);
    z = std::move(next);
  }
  return z;
}

// Conditional residuals of an ARMA(p,q) with pre-sample errors set to 0.
// Returns residuals for t = p .. n-1.
inline std::vector<double> arma_residuals(const std::vector<double>& z, int p, int q,
                                          const std::vector<double>& ar,
                                          const std::vector<double>& ma, double c) {
  int n = static_cast<int>(z.size());
  std::vector<double> e(n, 0.0), out;
  for (int t = p; t < n; ++t) {
    double pred = c;
    for (int i = 0; i < p; ++i) pred += ar[i] * z[t - 1 - i];
    for (int j = 0; j < q; ++j)
      if (t - 1 - j >= 0) pred += ma[j] * e[t - 1 - j];
    e[t] = z[t] - pred;
    out.push_back(e[t]);
  }
  return out;
}

inline double sse_of(const std::vector<double>& e) {
  double s = 0.0;
  for (double x : e) s += x * x;
  return s;
}

// Keep MA coefficients inside the invertible region (sufficient condition
// sum |beta_j| < 1); unconstrained CSS lets long MA filters overfit and win
// AIC against the true AR structure.
inline void project_invertible(std::vector<double>& ma) {
  double s = 0.0;
  for (double b : ma) s += std::abs(b);
  if (s >= 0.99) {
    double scale = 0.99 / s;
    for (double& b : ma) b *= scale;
  }
}

// OLS of z_t on [1, z_{t-1..t-p}, r_{t-1..t-q}] where r are proxy residuals.
inline bool regress(const std::vector<double>& z, int p, int q,
                    const std::vector<double>& proxy_resid, int proxy_offset,
                    std::vector<double>& ar, std::vector<double>& ma, double& c) {
  int n = static_cast<int>(z.size());
  int t0 = std::max(p, q + proxy_offset);
  int rows = n - t0;
  int cols = 1 + p + q;
  if (rows < cols) return false;
  Eigen::MatrixXd X(rows, cols);
  Eigen::VectorXd Y(rows);
  for (int r = 0; r < rows; ++r) {
    int t = t0 + r;
    Y(r) = z[t];
    X(r, 0) = 1.0;
    for (int i = 0; i < p; ++i) X(r, 1 + i) = z[t - 1 - i];
    for (int j = 0; j < q; ++j) X(r, 1 + p + j) = proxy_resid[t - 1 - j - proxy_offset];
  }
  Eigen::VectorXd beta = X.colPivHouseholderQr().solve(Y);
  if (!beta.allFinite()) return false;
  c = beta(0);
  ar.assign(p, 0.0);
  ma.assign(q, 0.0);
  for (int i = 0; i < p; ++i) ar[i] = beta(1 + i);
  for (int j = 0; j < q; ++j) ma[j] = beta(1 + p + j);
  return true;
}

}  // namespace detail

// Conditional-sum-of-squares ARIMA fit: difference d times, Hannan-Rissanen
// initialization (long-AR residual proxy), Gauss-Newton refinement with a
// numeric Jacobian. AIC = n*ln(SSE/n) + 2(p+q+1).
inline ForecastModel fit_arima(const std::vector<double>& window, int p, int d, int q) {
  if (p < 0 || d < 0 || q < 0) throw std::invalid_argument("fit_arima: negative order");
  int need = std::max(p, q) + d + 2;
  if (static_cast<int>(window.size()) < need)
    throw std::invalid_argument("fit_arima: window too short for requested order");
  for (double x : window)
    if (!std::isfinite(x)) throw std::invalid_argument("fit_arima: non-finite value");

  ForecastModel m;
  m.p = p;
  m.d = d;
  m.q = q;
  auto z = detail::difference(window, d);
  int n = static_cast<int>(z.size());

  double mean = 0.0;
  for (double x : z) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : z) var += (x - mean) * (x - mean);
  var /= n;

  auto finish = [&](double sse, int used) {
    int k = p + q + 1;
    double mse = std::max(sse / std::max(used, 1), 1e-300);
    m.aic = used * std::log(mse) + 2.0 * k;
  };

  if (var < 1e-18) {  // degenerate constant series -> pure intercept
    m.ar.assign(p, 0.0);
    m.ma.assign(q, 0.0);
    m.intercept = mean;
    m.residuals = detail::arma_residuals(z, p, q, m.ar, m.ma, m.intercept);
    finish(detail::sse_of(m.residuals), static_cast<int>(m.residuals.size()));
    return m;
  }

  // Hannan-Rissanen stage 1: long-AR residual proxy (only needed when q > 0)
  std::vector<double> proxy(n, 0.0);
  int proxy_offset = 0;
  if (q > 0) {
    int L = std::min(std::max(p + q, 2), std::max(1, n / 3));
    std::vector<double> ar_l, ma_l;
    double c_l = 0.0;
    std::vector<double> none;
    if (detail::regress(z, L, 0, none, 0, ar_l, ma_l, c_l)) {
      auto res = detail::arma_residuals(z, L, 0, ar_l, ma_l, c_l);
      proxy.assign(n, 0.0);
      for (int t = L; t < n; ++t) proxy[t] = res[t - L];
    }
  }

  std::vector<double> ar, ma;
  double c = 0.0;
  bool ok = detail::regress(z, p, q, proxy, 0, ar, ma, c);
  if (ok) detail::project_invertible(ma);
  if (!ok) {
    m.ar.assign(p, 0.0);
    m.ma.assign(q, 0.0);
    m.intercept = mean;
    m.fallback = true;
    m.residuals = detail::arma_residuals(z, p, q, m.ar, m.ma, m.intercept);
    finish(detail::sse_of(m.residuals), static_cast<int>(m.residuals.size()));
    return m;
  }

  // Gauss-Newton refinement of (c, ar, ma) on the conditional SSE
  if (q > 0) {
    int np = 1 + p + q;
    auto pack = [&](Eigen::VectorXd& th) {
      th(0) = c;
      for (int i = 0; i < p; ++i) th(1 + i) = ar[i];
      for (int j = 0; j < q; ++j) th(1 + p + j) = ma[j];
    };
    auto unpack = [&](const Eigen::VectorXd& th, std::vector<double>& a,
                      std::vector<double>& b, double& cc) {
      cc = th(0);
      a.assign(p, 0.0);
      b.assign(q, 0.0);
      for (int i = 0; i < p; ++i) a[i] = th(1 + i);
      for (int j = 0; j < q; ++j) b[j] = th(1 + p + j);
    };
    auto resid_at = [&](const Eigen::VectorXd& th) {
      std::vector<double> a, b;
      double cc;
      unpack(th, a, b, cc);
      return detail::arma_residuals(z, p, q, a, b, cc);
    };

    Eigen::VectorXd theta(np);
    pack(theta);
    auto e = resid_at(theta);
    double sse = detail::sse_of(e);
    double lambda = 1e-3;
    bool converged = false;
    for (int iter = 0; iter < 60; ++iter) {
      int rows = static_cast<int>(e.size());
      Eigen::MatrixXd J(rows, np);
      const double h = 1e-6;
      for (int k = 0; k < np; ++k) {
        Eigen::VectorXd th2 = theta;
        th2(k) += h;
        auto e2 = resid_at(th2);
        for (int r = 0; r < rows; ++r) J(r, k) = (e2[r] - e[r]) / h;
      }
      Eigen::VectorXd ev(rows);
      for (int r = 0; r < rows; ++r) ev(r) = e[r];
      Eigen::MatrixXd A = J.transpose() * J;
      A.diagonal().array() += lambda * (A.diagonal().array().abs() + 1e-12);
      Eigen::VectorXd step = A.ldlt().solve(-J.transpose() * ev);
      if (!step.allFinite()) break;
      Eigen::VectorXd th_new = theta + step;
      {
        std::vector<double> a, b;
        double cc;
        unpack(th_new, a, b, cc);
        detail::project_invertible(b);
        for (int j = 0; j < q; ++j) th_new(1 + p + j) = b[j];
      }
      auto e_new = resid_at(th_new);
      double sse_new = detail::sse_of(e_new);
      if (sse_new < sse) {
        double rel = (sse - sse_new) / std::max(sse, 1e-300);
        theta = th_new;
        e = std::move(e_new);
        sse = sse_new;
        lambda = std::max(lambda * 0.5, 1e-10);
        if (rel < 1e-10) {
          converged = true;
          break;
        }
      } else {
        lambda *= 10.0;
        if (lambda > 1e8) break;
      }
    }
    if (!converged) m.fallback = true;  // keep best-so-far coefficients
    unpack(theta, ar, ma, c);
  }

  m.ar = ar;
  m.ma = ma;
  m.intercept = c;
  m.residuals = detail::arma_residuals(z, p, q, ar, ma, c);
  finish(detail::sse_of(m.residuals), static_cast<int>(m.residuals.size()));
  return m;
}

// One-step-ahead forecast, clamped to [0,1].
inline double predict_next(const ForecastModel& m, const std::vector<double>& window) {
  auto z = detail::difference(window, m.d);
  int n = static_cast<int>(z.size());
  // rebuild conditional residual history
  std::vector<double> e(n, 0.0);
  {
    auto res = detail::arma_residuals(z, m.p, m.q, m.ar, m.ma, m.intercept);
    for (int t = m.p; t < n; ++t) e[t] = res[t - m.p];
  }
  double zf = m.intercept;
  for (int i = 0; i < m.p; ++i)
    if (n - 1 - i >= 0) zf += m.ar[i] * z[n - 1 - i];
  for (int j = 0; j < m.q; ++j)
    if (n - 1 - j >= 0) zf += m.ma[j] * e[n - 1 - j];
  // integrate back through the differencing levels
  double y = zf;
  for (int level = m.d - 1; level >= 0; --level) {
    auto zl = detail::difference(window, level);
    y += zl.back();
  }
  return std::clamp(y, 0.0, 1.0);
}

enum class ModelClass { arima, ar, ma, arma };

// AIC grid search over small orders; deterministic tie-break by (d,p,q).
inline ForecastModel select_model(const std::vector<double>& window,
                                  ModelClass cls = ModelClass::arima) {
  if (window.size() < 6)
    throw std::invalid_argument("select_model: window too short (need >= 6)");
  ForecastModel best;
  bool have = false;
  for (int d = 0; d <= 1; ++d) {
    if (d == 1 && (cls == ModelClass::ar || cls == ModelClass::ma || cls == ModelClass::arma))
      continue;
    for (int p = 0; p <= 3; ++p) {
      if (cls == ModelClass::ma && p != 0) continue;
      if (cls == ModelClass::ar && p == 0) continue;
      for (int q = 0; q <= 3; ++q) {
        if (cls == ModelClass::ar && q != 0) continue;
        if (cls == ModelClass::ma && q == 0) continue;
        if (p == 0 && q == 0 && d == 0) continue;
        if (static_cast<int>(window.size()) < std::max(p, q) + d + 2) continue;
        try {
          auto m = fit_arima(window, p, d, q);
          if (!std::isfinite(m.aic)) continue;
          if (!have || m.aic < best.aic) {
            best = m;
            have = true;
          }
        } catch (const std::exception&) {
        }
      }
    }
  }
  if (!have) {  // mean-forecast fallback
    double mean = 0.0;
    for (double x : window) mean += x;
    mean /= static_cast<double>(window.size());
    best.p = best.d = best.q = 0;
    best.intercept = mean;
    best.fallback = true;
  }
  return best;
}

struct RollingRow {
  int t = 0;
  double actual = 0, predicted = 0, error_pct = 0;
};

struct RollingReport {
  std::vector<RollingRow> rows;
  double mean_error = 0, std_error = 0;
  int skipped_zero = 0;
  int history = 0;
  bool recursive = false;
};

// Cross-validated one-step forecasts over a sliding history window. With
// `recursive`, previously predicted values replace actuals inside the window.
// error_t = |o_t - p_t| / o_t * 100; points with o_t = 0 are skipped.
inline RollingReport rolling_evaluate(const std::vector<double>& series, int history,
                                      bool recursive,
                                      ModelClass cls = ModelClass::arima,
                                      std::optional<std::array<int, 3>> fixed_order =
                                          std::nullopt) {
  int n = static_cast<int>(series.size());
  if (n <= history)
    throw std::invalid_argument("rolling_evaluate: series shorter than history");
  RollingReport rep;
  rep.history = history;
  rep.recursive = recursive;
  std::vector<double> working = series;  // predictions overwrite when recursive
  std::vector<double> errors;
  for (int t = history; t < n; ++t) {
    std::vector<double> window(working.begin() + (t - history), working.begin() + t);
    ForecastModel m;
    if (fixed_order)
      m = fit_arima(window, (*fixed_order)[0], (*fixed_order)[1], (*fixed_order)[2]);
    else
      m = select_model(window, cls);
    double pred = predict_next(m, window);
    if (recursive) working[t] = pred;
    double actual = series[t];
    RollingRow row{t, actual, pred, 0.0};
    if (actual == 0.0) {
      ++rep.skipped_zero;
      row.error_pct = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.error_pct = std::abs(actual - pred) / actual * 100.0;
      errors.push_back(row.error_pct);
    }
    rep.rows.push_back(row);
  }
  if (!errors.empty()) {
    double mu = 0.0;
    for (double e : errors) mu += e;
    mu /= static_cast<double>(errors.size());
    double var = 0.0;
    for (double e : errors) var += (e - mu) * (e - mu);
    var /= static_cast<double>(errors.size());
    rep.mean_error = mu;
    rep.std_error = std::sqrt(var);
  }
  return rep;
}

}  // namespace corenet
