#include "ringexp/ring.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ringexp {

int RingConfig::robot_count() const {
  return std::accumulate(occupancy.begin(), occupancy.end(), 0);
}

bool RingConfig::has_tower() const {
  for (uint8_t m : occupancy) {
    if (m >= 2) return true;
  }
  return false;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::optional<RingConfig> RingConfig::parse(std::string_view text, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<RingConfig> {
    if (error) *error = msg;
    return std::nullopt;
  };
  auto semi = text.find(';');
  if (semi == std::string_view::npos) return fail("expected 'n=<int>;occ=<csv>'");
  std::string_view n_part = text.substr(0, semi);
  std::string_view occ_part = text.substr(semi + 1);
  if (n_part.substr(0, 2) != "n=" || occ_part.substr(0, 4) != "occ=")
    return fail("expected 'n=<int>;occ=<csv>'");
  int n = 0;
  if (!parse_int(n_part.substr(2), n) || n < 1) return fail("invalid node count");
  RingConfig config;
  config.n = n;
  std::string_view csv = occ_part.substr(4);
  while (!csv.empty()) {
    auto comma = csv.find(',');
    std::string_view item = csv.substr(0, comma);
    int value = 0;
    if (!parse_int(item, value) || value < 0 || value > 255)
      return fail("invalid multiplicity '" + std::string(item) + "'");
    config.occupancy.push_back(static_cast<uint8_t>(value));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  if (static_cast<int>(config.occupancy.size()) != n)
    return fail("occupancy length does not match n");
  return config;
}

std::string RingConfig::format() const {
  std::ostringstream out;
  out << "n=" << n << ";occ=";
  for (int i = 0; i < n; ++i) {
    if (i) out << ',';
    out << static_cast<int>(occupancy[i]);
  }
  return out.str();
}

View view_at(const RingConfig& config, int node) {
  if (node < 0 || node >= config.n) throw std::out_of_range("view_at: node out of range");
  View v;
  v.forward.resize(config.n);
  v.backward.resize(config.n);
  for (int j = 0; j < config.n; ++j) {
    v.forward[j] = config.occupancy[(node + j) % config.n];
    v.backward[j] = config.occupancy[((node - j) % config.n + config.n) % config.n];
  }
  return v;
}

bool is_symmetric_view(const View& v) { return v.symmetric(); }

RingDistance ring_distance(int n, int a, int b) {
  int gap = forward_gap(n, a, b);
  int other = n - gap;
  RingDistance d;
  d.edges = gap < other ? gap : other;
  d.antipodal = gap == other;
  return d;
}

}  // namespace ringexp
