#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "corenet/params.hpp"

namespace corenet {

struct EmpiricalCdf {
  std::vector<double> support;     // strictly increasing
  std::vector<double> cumulative;  // non-decreasing, last == 1

  static EmpiricalCdf from_samples(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("EmpiricalCdf: no samples");
    std::sort(xs.begin(), xs.end());
    EmpiricalCdf cdf;
    std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n && xs[i + 1] == xs[i]) continue;
      cdf.support.push_back(xs[i]);
      cdf.cumulative.push_back(static_cast<double>(i + 1) / static_cast<double>(n));
    }
    return cdf;
  }

  double eval(double x) const {
    auto it = std::upper_bound(support.begin(), support.end(), x);
    if (it == support.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - support.begin()) - 1];
  }
};

// Two-sample KS D-statistic: sup over the merged support of |F_a - F_b|.
inline double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  double d = 0.0;
  for (double x : a.support) d = std::max(d, std::abs(a.eval(x) - b.eval(x)));
  for (double x : b.support) d = std::max(d, std::abs(a.eval(x) - b.eval(x)));
  return d;
}

// Pointwise mean of member CDFs on the union support.
inline EmpiricalCdf centroid_cdf(const std::vector<EmpiricalCdf>& members) {
  if (members.empty()) throw std::invalid_argument("centroid_cdf: no members");
  std::vector<double> support;
  for (const auto& m : members)
    support.insert(support.end(), m.support.begin(), m.support.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  EmpiricalCdf out;
  out.support = support;
  out.cumulative.reserve(support.size());
  for (double x : support) {
    double s = 0.0;
    for (const auto& m : members) s += m.eval(x);
    out.cumulative.push_back(s / static_cast<double>(members.size()));
  }
  return out;
}

// Agglomerative average-linkage clustering over the KS distance matrix,
// merged until exactly two clusters remain. Ties merge the pair that is
// lexicographically smallest by sorted member ids.
inline std::array<std::vector<int>, 2> cluster_parameter(
    const std::vector<EmpiricalCdf>& cdfs) {
  int n = static_cast<int>(cdfs.size());
  if (n < 2) throw std::invalid_argument("cluster_parameter: need >= 2 networks");

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dist[i][j] = dist[j][i] = ks_distance(cdfs[i], cdfs[j]);

  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) clusters.push_back({i});

  auto avg_link = [&](const std::vector<int>& a, const std::vector<int>& b) {
    double s = 0.0;
    for (int i : a)
      for (int j : b) s += dist[i][j];
    return s / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
  };

  while (clusters.size() > 2) {
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double d = avg_link(clusters[i], clusters[j]);
        if (d < best - 1e-15) {
          best = d;
          bi = i;
          bj = j;
        } else if (std::abs(d - best) <= 1e-15) {
          auto cand = std::make_pair(clusters[i], clusters[j]);
          auto cur = std::make_pair(clusters[bi], clusters[bj]);
          if (cand < cur) { bi = i; bj = j; }
        }
      }
    auto merged = clusters[bi];
    merged.insert(merged.end(), clusters[bj].begin(), clusters[bj].end());
    std::sort(merged.begin(), merged.end());
    clusters.erase(clusters.begin() + static_cast<long>(bj));
    clusters[bi] = std::move(merged);
  }
  for (auto& c : clusters) std::sort(c.begin(), c.end());
  if (clusters[0] > clusters[1]) std::swap(clusters[0], clusters[1]);
  return {clusters[0], clusters[1]};
}

enum class ParamKind { ef = 0, cfx = 1, ed = 2, cv = 3 };

inline const char* param_name(ParamKind k) {
  switch (k) {
    case ParamKind::ef: return "ef";
    case ParamKind::cfx: return "cfx";
    case ParamKind::ed: return "ed";
    default: return "cv";
  }
}

// High values are good for EF/ED/CV; low values are good for CFX.
inline bool higher_is_good(ParamKind k) { return k != ParamKind::cfx; }

struct ParamModel {
  std::vector<int> members_good, members_bad;  // training-network indices
  EmpiricalCdf centroid_good, centroid_bad;
  double mean_good = 0, mean_bad = 0;
};

struct ClusterModel {
  std::vector<std::string> network_names;
  std::array<ParamModel, 4> params;
};

namespace detail {

inline double mean_of(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

inline double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

inline const std::vector<double>& series_values(const ParamSeries& s, ParamKind k) {
  switch (k) {
    case ParamKind::ef: return s.ef_values;
    case ParamKind::cfx: return s.cfx_values;
    case ParamKind::ed: return s.ed_values;
    default: return s.cv_values;
  }
}

}  // namespace detail

// Assign G to the cluster whose members conform more to the desirable
// property: higher mean for EF/ED/CV, lower mean for CFX.
inline ParamModel label_clusters(const std::array<std::vector<int>, 2>& clusters,
                                 ParamKind kind,
                                 const std::vector<EmpiricalCdf>& cdfs,
                                 const std::vector<std::vector<double>>& raw) {
  auto cluster_stat = [&](const std::vector<int>& members, bool median) {
    std::vector<double> member_stats;
    for (int i : members)
      member_stats.push_back(median ? detail::median_of(raw[i])
                                    : detail::mean_of(raw[i]));
    return detail::mean_of(member_stats);
  };
  double m0 = cluster_stat(clusters[0], false);
  double m1 = cluster_stat(clusters[1], false);
  int good;
  if (m0 != m1) {
    good = (m0 > m1) == higher_is_good(kind) ? 0 : 1;
  } else {
    double md0 = cluster_stat(clusters[0], true);
    double md1 = cluster_stat(clusters[1], true);
    if (md0 == md1)
      throw std::runtime_error(std::string("label_clusters: unresolvable tie on ") +
                               param_name(kind));
    good = (md0 > md1) == higher_is_good(kind) ? 0 : 1;
  }
  ParamModel pm;
  pm.members_good = clusters[good];
  pm.members_bad = clusters[1 - good];
  std::vector<EmpiricalCdf> gc, bc;
  for (int i : pm.members_good) gc.push_back(cdfs[i]);
  for (int i : pm.members_bad) bc.push_back(cdfs[i]);
  pm.centroid_good = centroid_cdf(gc);
  pm.centroid_bad = centroid_cdf(bc);
  pm.mean_good = cluster_stat(pm.members_good, false);
  pm.mean_bad = cluster_stat(pm.members_bad, false);
  return pm;
}

inline ClusterModel train_model(const std::vector<std::string>& names,
                                const std::vector<ParamSeries>& series) {
  if (names.size() != series.size())
    throw std::invalid_argument("train_model: names/series size mismatch");
  if (series.size() < 2)
    throw std::invalid_argument("train_model: need >= 2 training networks");
  ClusterModel model;
  model.network_names = names;
  for (int kind = 0; kind < 4; ++kind) {
    ParamKind pk = static_cast<ParamKind>(kind);
    std::vector<EmpiricalCdf> cdfs;
    std::vector<std::vector<double>> raw;
    for (const auto& s : series) {
      const auto& vals = detail::series_values(s, pk);
      raw.push_back(vals);
      cdfs.push_back(EmpiricalCdf::from_samples(vals));
    }
    auto clusters = cluster_parameter(cdfs);
    model.params[static_cast<std::size_t>(kind)] =
        label_clusters(clusters, pk, cdfs, raw);
  }
  return model;
}

struct Category {
  std::array<char, 4> labels{};  // 'G' or 'B', ordered (EF, CFX, ED, CV)
  bool good = false;             // >= 2 G labels
  std::array<bool, 4> equidistant{};
  std::string label_string() const { return std::string(labels.begin(), labels.end()); }
};

// Rocchio: nearest centroid by KS distance, per parameter. Equidistant
// parameters fall to B and are flagged.
inline Category rocchio_assign(const ClusterModel& model, const ParamSeries& series) {
  Category cat;
  int goods = 0;
  for (int kind = 0; kind < 4; ++kind) {
    ParamKind pk = static_cast<ParamKind>(kind);
    const auto& vals = detail::series_values(series, pk);
    if (vals.size() < 2)
      throw std::invalid_argument("rocchio_assign: need >= 2 observations per parameter");
    auto cdf = EmpiricalCdf::from_samples(vals);
    const auto& pm = model.params[static_cast<std::size_t>(kind)];
    double dg = ks_distance(cdf, pm.centroid_good);
    double db = ks_distance(cdf, pm.centroid_bad);
    std::size_t i = static_cast<std::size_t>(kind);
    if (dg < db) {
      cat.labels[i] = 'G';
      ++goods;
    } else {
      cat.labels[i] = 'B';
      if (dg == db) cat.equidistant[i] = true;
    }
  }
  cat.good = goods >= 2;
  return cat;
}

}  // namespace corenet
