// Structural classification of ring configurations: holes, inter-distance,
// d.blocks, towers, symmetry axes, and the named pattern predicates the
// protocols dispatch on.
#ifndef RINGEXP_STRUCTURE_HPP_
#define RINGEXP_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "ringexp/ring.hpp"

namespace ringexp {

// Maximal run of consecutive empty nodes. `start` is the first empty node
// walking toward higher indices; the border nodes are start and
// start+size-1 (they coincide for size 1).
struct Hole {
  int start = 0;
  int size = 0;
};

// Maximal path with one robot every d edges, d the configuration's
// inter-distance. Nodes are listed in ring order from one border to the
// other. When every consecutive robot gap equals d the path closes into a
// cycle; such a block has no borders and `cyclic` is set.
struct DBlock {
  std::vector<int> nodes;
  bool cyclic = false;

  int size() const { return static_cast<int>(nodes.size()); }
  bool contains(int node) const;
};

// A reflection of the cycle: node i maps to (c - i) mod n. The axis passes
// through the fixed nodes (one for odd n; for even n either two nodes or
// two edge midpoints, in which case fixed_nodes is empty).
struct Axis {
  int c = 0;
  std::vector<int> fixed_nodes;
  std::vector<int> occupied_on_axis;

  int reflect(int node, int n) const { return ((c - node) % n + n) % n; }
  bool through_node(int node) const {
    for (int f : fixed_nodes)
      if (f == node) return true;
    return false;
  }
};

struct StructureReport {
  int n = 0;
  int k = 0;
  std::vector<Hole> holes;
  // Minimum pairwise robot distance; absent when fewer than two robots.
  std::optional<int> inter_distance;
  std::vector<DBlock> d_blocks;
  std::vector<int> towers;           // nodes with multiplicity >= 2
  std::vector<int> isolated_robots;  // occupied nodes in no d.block
  // Maximal runs of consecutive occupied nodes of size >= 2 (spacing-1
  // blocks, independent of the inter-distance).
  std::vector<DBlock> one_runs;

  bool is_tower_chain = false;
  bool single_1block_of_k = false;
  bool s_tower_plan = false;
  bool a_tower_plan = false;
  bool tower_guide = false;
  bool tower_block = false;
  bool tower_sole = false;

  std::vector<Axis> symmetry_axes;

  bool symmetric() const { return !symmetry_axes.empty(); }
  const DBlock* block_of(int node) const;
  const DBlock* one_run_of(int node) const;
  bool in_d_block(int node) const { return block_of(node) != nullptr; }
};

StructureReport classify(const RingConfig& config);

std::vector<Axis> symmetry_axes(const RingConfig& config);

// Ring isometries. rotate moves node i to i+shift; reflect applies
// i -> (c - i) mod n.
RingConfig rotate(const RingConfig& config, int shift);
RingConfig reflect(const RingConfig& config, int c);

// Lexicographically minimal occupancy over all rotations and reflections.
// Two configurations have equal canonical forms iff they are related by a
// ring isometry.
RingConfig canonical_form(const RingConfig& config);

}  // namespace ringexp

#endif  // RINGEXP_STRUCTURE_HPP_
