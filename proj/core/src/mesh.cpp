#include "adsorb/mesh.hpp"

#include <cmath>
#include <cstring>

#include "adsorb/errors.hpp"

namespace adsorb {

namespace {

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Mesh Mesh::build(std::vector<MeshRegion> regions) {
  if (regions.empty()) throw ConfigError("mesh: needs at least one region");
  Mesh m;
  m.nodes_.push_back(0.0);
  double prev = 0.0;
  for (const MeshRegion& r : regions) {
    if (!(r.step > 0.0)) throw ConfigError("mesh: region step must be positive");
    if (!(r.end > prev)) throw ConfigError("mesh: region ends must be strictly increasing");
    const double count_real = (r.end - prev) / r.step;
    const auto count = static_cast<std::size_t>(std::llround(count_real));
    if (count == 0 || std::abs(count_real - static_cast<double>(count)) > 1e-6) {
      throw ConfigError("mesh: region end must align to a whole number of steps");
    }
    Span span{m.nodes_.size(), count, r.step};
    for (std::size_t q = 1; q <= count; ++q) {
      m.nodes_.push_back(prev + static_cast<double>(q) * r.step);
    }
    m.nodes_.back() = r.end;  // pin the boundary exactly
    m.spans_.push_back(span);
    prev = r.end;
  }
  std::uint64_t h = 1469598103934665603ull;
  for (const MeshRegion& r : regions) {
    h = fnv1a(&r.end, sizeof(double), h);
    h = fnv1a(&r.step, sizeof(double), h);
  }
  m.hash_ = h;
  m.regions_ = std::move(regions);
  return m;
}

Mesh Mesh::default_mixed() {
  return build({{1e-3, 1e-5}, {1e-2, 1e-4}, {1e-1, 1e-3}, {1.0, 1e-2}, {1000.0, 1e-1}});
}

Mesh Mesh::default_dc() {
  return build({{1e-3, 1e-5},
                {1e-2, 1e-4},
                {1e-1, 1e-3},
                {1.0, 1e-2},
                {10.0, 2.5e-2},
                {1000.0, 1e-1}});
}

}  // namespace adsorb
