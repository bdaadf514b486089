#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "corenet/graph.hpp"

namespace corenet {

enum class GenProfile { conforming, non_conforming };

struct GenSpec {
  int n = 3000;
  int steps = 50;
  GenProfile profile = GenProfile::conforming;
  int core_size = 15;
  double core_density = 0.9;
  double churn = 0.05;        // per-step fraction of rewired periphery edges
  double core_churn = 0.02;   // per-step fraction of replaced core members
  int decoy_hubs = 3;         // high-degree periphery decoys (conforming only)
  double avg_degree = 4.0;    // non-conforming edge budget
  std::uint64_t seed = 1;

  void check() const {
    if (n < 10) throw std::invalid_argument("GenSpec: n too small");
    if (steps < 2) throw std::invalid_argument("GenSpec: need >= 2 steps");
    if (core_size >= n) throw std::invalid_argument("GenSpec: core_size must be < n");
    if (core_density < 0 || core_density > 1 || churn < 0 || churn > 1 ||
        core_churn < 0 || core_churn > 1)
      throw std::invalid_argument("GenSpec: densities and churn must be in [0,1]");
    if (core_density * (core_size - 1) < 2.0)
      throw std::invalid_argument("GenSpec: core too sparse to stay the top core");
  }
};

namespace detail {

struct ConformingState {
  std::vector<int> core_members;           // current core vertex ids
  std::vector<double> slot_cum;            // cumulative attachment weights
  std::set<std::pair<int, int>> core_edges;
  std::vector<std::vector<int>> attach;    // periphery vertex -> targets
  std::vector<int> decoys;
  std::vector<std::vector<int>> decoy_nbrs;
  std::vector<char> is_core;
  std::vector<char> is_decoy;
};

// skewed attachment across core slots (harmonic weights): degree, closeness
// and betweenness then rank the core the same way, like real hub hierarchies
inline int pick_core_slot(const ConformingState& st, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, st.slot_cum.back());
  auto it = std::upper_bound(st.slot_cum.begin(), st.slot_cum.end(), u(rng));
  return static_cast<int>(it - st.slot_cum.begin());
}

inline void sample_core_edges(ConformingState& st, int entering, double density,
                              std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int other : st.core_members) {
    if (other == entering) continue;
    if (coin(rng) < density) {
      int a = std::min(entering, other), b = std::max(entering, other);
      st.core_edges.insert({a, b});
    }
  }
}

inline void sample_attach(ConformingState& st, int v, const GenSpec& spec,
                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  st.attach[v].clear();
  // first edge: to the core, or (for later vertices) to an earlier periphery
  // vertex, building short chains that keep the periphery sparse
  bool to_core = v < spec.core_size + 5 || coin(rng) < 0.6;
  if (to_core) {
    st.attach[v].push_back(st.core_members[pick_core_slot(st, rng)]);
  } else {
    std::uniform_int_distribution<int> pick_prev(0, v - 1);
    int w = pick_prev(rng);
    while (st.is_decoy[w] || w == v) w = pick_prev(rng);
    st.attach[v].push_back(w);
  }
  // occasional second edge to the core
  if (coin(rng) < 0.3) st.attach[v].push_back(st.core_members[pick_core_slot(st, rng)]);
}

}  // namespace detail

// Seeded temporal generator with a planted dense core. The conforming profile
// keeps a stable dense core plus a sparse periphery attached mostly to the
// core (high EF/ED/CV, low CFX); the non-conforming profile is a near-uniform
// sparse graph whose edges are heavily rewired every step.
inline SnapshotSeries generate(const GenSpec& spec) {
  spec.check();
  std::mt19937_64 rng(spec.seed);
  SnapshotSeries series;
  series.mode = AggregationMode::windowed;
  series.window = 1;

  if (spec.profile == GenProfile::non_conforming) {
    // Sparse multi-community graph without a stable dominant core: moderate-
    // density communities of varying size (small, shifting top core; locally
    // dense shells) plus a thin layer of inter-community edges, with a churn
    // fraction of communities fully re-sampled every step.
    std::uniform_int_distribution<int> comm_size(6, 14);
    std::vector<std::pair<int, int>> comms;  // [first, last)
    for (int v = 0; v < spec.n;) {
      int sz = std::min(comm_size(rng), spec.n - v);
      comms.push_back({v, v + sz});
      v += sz;
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> density(0.3, 0.6);
    std::vector<std::set<std::pair<int, int>>> intra(comms.size());
    // per step, a churn fraction of each community's vertex pairs is redrawn
    // against a freshly sampled density, so the k-max winner keeps moving
    auto rewire_comm = [&](std::size_t c, double fraction) {
      double p = density(rng);
      for (int a = comms[c].first; a < comms[c].second; ++a)
        for (int b = a + 1; b < comms[c].second; ++b) {
          if (coin(rng) >= fraction) continue;
          if (coin(rng) < p)
            intra[c].insert({a, b});
          else
            intra[c].erase({a, b});
        }
    };
    for (std::size_t c = 0; c < comms.size(); ++c) rewire_comm(c, 1.0);

    std::size_t m_inter = static_cast<std::size_t>(spec.n / 4);
    std::uniform_int_distribution<int> pick(0, spec.n - 1);
    std::set<std::pair<int, int>> inter;
    auto add_inter_edge = [&]() {
      for (;;) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        auto e = std::make_pair(std::min(u, v), std::max(u, v));
        if (inter.insert(e).second) return;
      }
    };
    while (inter.size() < m_inter) add_inter_edge();

    for (int step = 0; step < spec.steps; ++step) {
      if (step > 0) {
        for (std::size_t c = 0; c < comms.size(); ++c) rewire_comm(c, spec.churn);
        std::size_t rewire = static_cast<std::size_t>(spec.churn * m_inter);
        for (std::size_t i = 0; i < rewire && !inter.empty(); ++i) {
          std::uniform_int_distribution<std::size_t> pick_edge(0, inter.size() - 1);
          auto it = inter.begin();
          std::advance(it, pick_edge(rng));
          inter.erase(it);
          add_inter_edge();
        }
      }
      std::set<std::pair<VertexId, VertexId>> es;
      for (auto& s : intra)
        for (auto& [u, v] : s) es.insert({u, v});
      for (auto& [u, v] : inter) es.insert({u, v});
      series.snapshots.push_back(Snapshot::from_edge_set(step, es));
    }
    return series;
  }

  // conforming profile
  detail::ConformingState st;
  st.is_core.assign(spec.n, 0);
  st.is_decoy.assign(spec.n, 0);
  st.attach.resize(spec.n);
  for (int v = 0; v < spec.core_size; ++v) {
    st.core_members.push_back(v);
    st.is_core[v] = 1;
    st.slot_cum.push_back((st.slot_cum.empty() ? 0.0 : st.slot_cum.back()) +
                          1.0 / (v + 1));
  }
  for (int i = 0; i < spec.decoy_hubs; ++i) {
    int v = spec.n - 1 - i;
    st.decoys.push_back(v);
    st.is_decoy[v] = 1;
  }
  for (int v : st.core_members)
    detail::sample_core_edges(st, v, spec.core_density, rng);
  for (int v = spec.core_size; v < spec.n; ++v)
    if (!st.is_decoy[v]) detail::sample_attach(st, v, spec, rng);

  // decoy degree target: just above the largest core degree
  {
    std::vector<int> core_deg(spec.n, 0);
    for (auto& [a, b] : st.core_edges) {
      ++core_deg[a];
      ++core_deg[b];
    }
    for (int v = 0; v < spec.n; ++v)
      if (!st.is_core[v] && !st.is_decoy[v])
        for (int t : st.attach[v])
          if (st.is_core[t]) ++core_deg[t];
    // decoys outrank the median core member by degree (enough to fool a
    // global-degree ranking) while staying peripheral, hence low-centrality
    std::vector<int> degs;
    for (int v : st.core_members) degs.push_back(core_deg[v]);
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    int hub_degree = degs[degs.size() / 2] + 10;
    std::uniform_int_distribution<int> pick(spec.core_size, spec.n - 1 - spec.decoy_hubs);
    st.decoy_nbrs.resize(st.decoys.size());
    for (std::size_t i = 0; i < st.decoys.size(); ++i) {
      std::set<int> nbrs;
      while (static_cast<int>(nbrs.size()) < std::min(hub_degree, spec.n / 4))
        nbrs.insert(pick(rng));
      st.decoy_nbrs[i].assign(nbrs.begin(), nbrs.end());
    }
  }

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  // core reorganization comes in bursts: calm stretches with almost no member
  // turnover, interrupted by short high-churn regimes
  bool burst = false;
  for (int step = 0; step < spec.steps; ++step) {
    if (step > 0) {
      burst = burst ? coin(rng) >= 0.3 : coin(rng) < 0.1;
      // core churn: swap members out for periphery vertices
      int swaps = 0;
      double expected = spec.core_churn * spec.core_size * (burst ? 4.0 : 0.25);
      swaps = static_cast<int>(expected);
      if (coin(rng) < expected - swaps) ++swaps;
      std::uniform_int_distribution<int> pick_any(0, spec.n - 1);
      for (int s = 0; s < swaps; ++s) {
        std::uniform_int_distribution<std::size_t> pick_slot(0, st.core_members.size() - 1);
        std::size_t slot = pick_slot(rng);
        int leaving = st.core_members[slot];
        int entering = pick_any(rng);
        while (st.is_core[entering] || st.is_decoy[entering]) entering = pick_any(rng);
        // drop the leaving member's core edges, demote it to the periphery
        for (auto it = st.core_edges.begin(); it != st.core_edges.end();)
          if (it->first == leaving || it->second == leaving)
            it = st.core_edges.erase(it);
          else
            ++it;
        st.is_core[leaving] = 0;
        st.is_core[entering] = 1;
        st.core_members[slot] = entering;
        // the entering vertex takes over the leaving member's role wholesale:
        // periphery attachments transfer, so it is centrally placed from its
        // first snapshot (history-free emergence)
        for (auto& targets : st.attach)
          for (int& t : targets)
            if (t == leaving) t = entering;
        st.attach[entering].clear();
        detail::sample_core_edges(st, entering, spec.core_density, rng);
        detail::sample_attach(st, leaving, spec, rng);
      }
      // periphery churn: re-sample attachments for a fraction of vertices
      for (int v = spec.core_size; v < spec.n; ++v)
        if (!st.is_core[v] && !st.is_decoy[v] && coin(rng) < spec.churn)
          detail::sample_attach(st, v, spec, rng);
    }

    std::set<std::pair<VertexId, VertexId>> es;
    for (auto& [a, b] : st.core_edges) es.insert({a, b});
    for (int v = 0; v < spec.n; ++v)
      if (!st.is_core[v] && !st.is_decoy[v])
        for (int t : st.attach[v])
          if (t != v) es.insert({std::min<VertexId>(v, t), std::max<VertexId>(v, t)});
    for (std::size_t i = 0; i < st.decoys.size(); ++i)
      for (int w : st.decoy_nbrs[i])
        if (!st.is_core[w])
          es.insert({std::min<VertexId>(st.decoys[i], w),
                     std::max<VertexId>(st.decoys[i], w)});
    series.snapshots.push_back(Snapshot::from_edge_set(step, es));
  }
  return series;
}

// Standard "u v t" edge-list export; t is the snapshot index.
inline void write_edge_list(const SnapshotSeries& series, std::ostream& out) {
  for (const auto& g : series.snapshots) {
    int n = static_cast<int>(g.num_vertices());
    for (int v = 0; v < n; ++v)
      for (int w : g.adj[v])
        if (v < w) out << g.ids[v] << ' ' << g.ids[w] << ' ' << g.index << '\n';
  }
}

}  // namespace corenet
