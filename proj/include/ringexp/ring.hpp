// Ring configurations and robot views.
//
// A configuration is the multiset of robot positions on an n-node cycle,
// stored as one multiplicity per node. Node indices live in an internal
// global frame that protocols never observe directly; they only see views.
#ifndef RINGEXP_RING_HPP_
#define RINGEXP_RING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ringexp {

// Internal movement direction. ToLower decreases the node index mod n,
// ToHigher increases it. Protocols express choices relative to views; the
// engine resolves them to this frame.
enum class Direction : uint8_t { ToLower = 0, ToHigher = 1 };

inline Direction opposite(Direction d) {
  return d == Direction::ToLower ? Direction::ToHigher : Direction::ToLower;
}

struct RingConfig {
  int n = 0;
  std::vector<uint8_t> occupancy;  // size n, multiplicity per node

  RingConfig() = default;
  RingConfig(int n_, std::vector<uint8_t> occ) : n(n_), occupancy(std::move(occ)) {}

  int robot_count() const;
  bool occupied(int node) const { return occupancy[node] != 0; }
  int multiplicity(int node) const { return occupancy[node]; }
  bool has_tower() const;

  int step(int node, Direction d) const {
    return d == Direction::ToHigher ? (node + 1) % n : (node + n - 1) % n;
  }

  bool operator==(const RingConfig& other) const = default;

  // Text format used by the CLI and fixtures: "n=<int>;occ=<csv>".
  static std::optional<RingConfig> parse(std::string_view text, std::string* error = nullptr);
  std::string format() const;
};

// The two multiplicity sequences a robot reads in its Look phase, starting
// at its own node and walking the ring in each orientation.
struct View {
  std::vector<uint8_t> forward;
  std::vector<uint8_t> backward;

  bool symmetric() const { return forward == backward; }
};

View view_at(const RingConfig& config, int node);
bool is_symmetric_view(const View& v);

// Edge count along the shorter arc. `antipodal` is set when both arcs tie
// (only possible for even n).
struct RingDistance {
  int edges = 0;
  bool antipodal = false;
};
RingDistance ring_distance(int n, int a, int b);

// Edge count from `from` to `to` walking toward higher indices.
inline int forward_gap(int n, int from, int to) { return ((to - from) % n + n) % n; }

}  // namespace ringexp

#endif  // RINGEXP_RING_HPP_
