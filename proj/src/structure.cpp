#include "ringexp/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringexp {

bool DBlock::contains(int node) const {
  return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

const DBlock* StructureReport::block_of(int node) const {
  for (const DBlock& b : d_blocks)
    if (b.contains(node)) return &b;
  return nullptr;
}

const DBlock* StructureReport::one_run_of(int node) const {
  for (const DBlock& b : one_runs)
    if (b.contains(node)) return &b;
  return nullptr;
}

std::vector<Axis> symmetry_axes(const RingConfig& config) {
  std::vector<Axis> axes;
  const int n = config.n;
  for (int c = 0; c < n; ++c) {
    bool invariant = true;
    for (int i = 0; i < n; ++i) {
      int j = ((c - i) % n + n) % n;
      if (config.occupancy[i] != config.occupancy[j]) {
        invariant = false;
        break;
      }
    }
    if (!invariant) continue;
    Axis axis;
    axis.c = c;
    // Fixed nodes solve 2u == c (mod n).
    for (int u = 0; u < n; ++u) {
      if ((2 * u) % n == c % n) axis.fixed_nodes.push_back(u);
    }
    for (int u : axis.fixed_nodes) {
      if (config.occupied(u)) axis.occupied_on_axis.push_back(u);
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

RingConfig rotate(const RingConfig& config, int shift) {
  const int n = config.n;
  RingConfig out = config;
  for (int i = 0; i < n; ++i) out.occupancy[((i + shift) % n + n) % n] = config.occupancy[i];
  return out;
}

RingConfig reflect(const RingConfig& config, int c) {
  const int n = config.n;
  RingConfig out = config;
  for (int i = 0; i < n; ++i) out.occupancy[((c - i) % n + n) % n] = config.occupancy[i];
  return out;
}

RingConfig canonical_form(const RingConfig& config) {
  const int n = config.n;
  RingConfig best = config;
  for (int c = 0; c < 2 * n; ++c) {
    RingConfig candidate = c < n ? rotate(config, c) : reflect(config, c - n);
    if (candidate.occupancy < best.occupancy) best = candidate;
  }
  return best;
}

namespace {

// Occupied nodes in ring order plus the forward gap to the next one.
struct OccupiedRing {
  std::vector<int> nodes;
  std::vector<int> gaps;  // gaps[i] = edges from nodes[i] to nodes[i+1 mod k']
};

OccupiedRing occupied_ring(const RingConfig& config) {
  OccupiedRing ring;
  for (int i = 0; i < config.n; ++i)
    if (config.occupied(i)) ring.nodes.push_back(i);
  const int m = static_cast<int>(ring.nodes.size());
  ring.gaps.resize(m);
  for (int i = 0; i < m; ++i)
    ring.gaps[i] = forward_gap(config.n, ring.nodes[i], ring.nodes[(i + 1) % m]);
  return ring;
}

void find_holes(const RingConfig& config, StructureReport& report) {
  const int n = config.n;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (config.occupied(i) || seen[i]) continue;
    // Walk back to the start of this empty run.
    int start = i;
    while (!config.occupied((start + n - 1) % n)) {
      start = (start + n - 1) % n;
      if (start == i) break;  // fully empty ring
    }
    int size = 0;
    for (int j = start; !config.occupied(j); j = (j + 1) % n) {
      seen[j] = true;
      ++size;
      if (size == n) break;
    }
    report.holes.push_back(Hole{start, size});
  }
  std::sort(report.holes.begin(), report.holes.end(),
            [](const Hole& a, const Hole& b) { return a.start < b.start; });
}

// d.blocks over the occupied-node ring (towers count as one occupied node).
void find_d_blocks(const RingConfig& config, const OccupiedRing& ring, StructureReport& report) {
  const int m = static_cast<int>(ring.nodes.size());
  if (m < 2) {
    if (m == 1) report.isolated_robots.push_back(ring.nodes[0]);
    return;
  }
  const int d = *std::min_element(ring.gaps.begin(), ring.gaps.end());
  report.inter_distance = d;
  if (std::all_of(ring.gaps.begin(), ring.gaps.end(), [&](int g) { return g == d; })) {
    // Every gap equals d: the path closes into a cycle with no borders.
    DBlock block;
    block.nodes = ring.nodes;
    block.cyclic = true;
    report.d_blocks.push_back(std::move(block));
    return;
  }
  // Maximal runs of consecutive occupied nodes whose gap is exactly d.
  std::vector<bool> used(m, false);
  for (int i = 0; i < m; ++i) {
    if (used[i]) continue;
    if (ring.gaps[(i + m - 1) % m] == d) continue;  // not a run start
    int len = 1;
    int j = i;
    while (ring.gaps[j] == d) {
      j = (j + 1) % m;
      ++len;
    }
    if (len >= 2) {
      DBlock block;
      for (int t = 0, p = i; t < len; ++t, p = (p + 1) % m) {
        block.nodes.push_back(ring.nodes[p]);
        used[p] = true;
      }
      report.d_blocks.push_back(std::move(block));
    } else {
      used[i] = true;
      report.isolated_robots.push_back(ring.nodes[i]);
    }
  }
  std::sort(report.isolated_robots.begin(), report.isolated_robots.end());
}

// Maximal runs of >= 2 consecutive occupied nodes, regardless of d.
void find_one_runs(const RingConfig& config, const OccupiedRing& ring, StructureReport& report) {
  const int m = static_cast<int>(ring.nodes.size());
  if (m < 2) return;
  if (std::all_of(ring.gaps.begin(), ring.gaps.end(), [](int g) { return g == 1; })) {
    DBlock run;
    run.nodes = ring.nodes;
    run.cyclic = true;
    report.one_runs.push_back(std::move(run));
    return;
  }
  for (int i = 0; i < m; ++i) {
    if (ring.gaps[(i + m - 1) % m] == 1) continue;
    int len = 1;
    int j = i;
    while (ring.gaps[j] == 1) {
      j = (j + 1) % m;
      ++len;
    }
    if (len < 2) continue;
    DBlock run;
    for (int t = 0, p = i; t < len; ++t, p = (p + 1) % m) run.nodes.push_back(ring.nodes[p]);
    report.one_runs.push_back(std::move(run));
  }
}

// Matches the 5-node window pattern at offset `start` walking in direction
// `dir`, where pattern entries are: 1 = exactly one robot, 0 = empty,
// 2 = tower (>= 2).
bool window_match(const RingConfig& config, int start, int dir, const std::vector<int>& pattern) {
  const int n = config.n;
  for (size_t t = 0; t < pattern.size(); ++t) {
    int node = ((start + dir * static_cast<int>(t)) % n + n) % n;
    int m = config.multiplicity(node);
    if (pattern[t] == 0 && m != 0) return false;
    if (pattern[t] == 1 && m != 1) return false;
    if (pattern[t] == 2 && m < 2) return false;
  }
  return true;
}

void find_flags(const RingConfig& config, StructureReport& report) {
  const int n = config.n;
  const int tower_count = static_cast<int>(report.towers.size());

  // tower-chain: 1.block of size 3, one empty node, then a tower, and no
  // robot anywhere else.
  if (tower_count == 1 && n >= 6) {
    for (int i = 0; i < n && !report.is_tower_chain; ++i) {
      for (int dir : {1, -1}) {
        if (!window_match(config, i, dir, {1, 1, 1, 0, 2})) continue;
        bool rest_empty = true;
        for (int t = 5; t < n; ++t) {
          int node = ((i + dir * t) % n + n) % n;
          if (config.occupied(node)) {
            rest_empty = false;
            break;
          }
        }
        if (rest_empty) {
          report.is_tower_chain = true;
          break;
        }
      }
    }
  }

  // single 1.block containing all k robots (no tower, k consecutive nodes).
  report.single_1block_of_k = tower_count == 0 && report.one_runs.size() == 1 &&
                              !report.one_runs[0].cyclic &&
                              report.one_runs[0].size() == report.k;

  // S-tower-plan: symmetric, no tower, two 1.blocks sharing a hole of size 1.
  if (tower_count == 0 && report.symmetric()) {
    for (const Hole& hole : report.holes) {
      if (hole.size != 1) continue;
      int before = (hole.start + n - 1) % n;
      int after = (hole.start + 1) % n;
      const DBlock* run_before = report.one_run_of(before);
      const DBlock* run_after = report.one_run_of(after);
      if (run_before && run_after && run_before != run_after) {
        report.s_tower_plan = true;
        break;
      }
    }
  }

  // A-tower-plan: asymmetric, no tower, a maximal 1.block of size 3 with an
  // isolated robot at distance 2 from one of its borders.
  if (tower_count == 0 && !report.symmetric()) {
    for (int i = 0; i < n && !report.a_tower_plan; ++i) {
      for (int dir : {1, -1}) {
        int before = ((i - dir) % n + n) % n;
        int beyond = ((i + dir * 5) % n + n) % n;
        if (window_match(config, i, dir, {1, 1, 1, 0, 1}) && !config.occupied(before) &&
            !config.occupied(beyond)) {
          report.a_tower_plan = true;
          break;
        }
      }
    }
  }

  // tower-guide: tower, empty, robot, empty, robot.
  if (tower_count >= 1) {
    for (int t : report.towers) {
      for (int dir : {1, -1}) {
        if (window_match(config, t, dir, {2, 0, 1, 0, 1})) {
          report.tower_guide = true;
          break;
        }
      }
      if (report.tower_guide) break;
    }
  }

  // tower-block: one robot at distance 1 on each side of the tower.
  if (tower_count == 1) {
    int t = report.towers[0];
    report.tower_block =
        config.multiplicity((t + 1) % n) == 1 && config.multiplicity((t + n - 1) % n) == 1;
  }

  // tower-sole: symmetric, one tower, and a 1.block not containing it.
  if (tower_count == 1 && report.symmetric()) {
    for (const DBlock& run : report.one_runs) {
      if (!run.contains(report.towers[0])) {
        report.tower_sole = true;
        break;
      }
    }
  }
}

}  // namespace

StructureReport classify(const RingConfig& config) {
  if (config.robot_count() < 1) throw std::invalid_argument("classify: empty configuration");
  StructureReport report;
  report.n = config.n;
  report.k = config.robot_count();
  for (int i = 0; i < config.n; ++i)
    if (config.multiplicity(i) >= 2) report.towers.push_back(i);
  OccupiedRing ring = occupied_ring(config);
  find_holes(config, report);
  find_d_blocks(config, ring, report);
  find_one_runs(config, ring, report);
  report.symmetry_axes = symmetry_axes(config);
  find_flags(config, report);
  return report;
}

}  // namespace ringexp
