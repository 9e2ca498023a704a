#ifndef ADSORB_MESH_HPP_
#define ADSORB_MESH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace adsorb {

// One uniform stretch of the time grid: nodes every `step` up to `end`.
struct MeshRegion {
  double end;
  double step;
};

// Multi-region nonuniform time grid. Node 0 is t = 0; region r contributes
// nodes prev_end + q*step, q = 1..count, and its `end` must align to a
// whole number of steps. Mixed-control runs define the grid in t*; ba = 0
// runs read the same numbers as t~.
class Mesh {
 public:
  static Mesh build(std::vector<MeshRegion> regions);

  // steps 1e-5 (t* <= 1e-3), 1e-4 (<= 1e-2), 1e-3 (<= 1e-1),
  // 1e-2 (<= 1), 1e-1 (<= 1000)
  static Mesh default_mixed();

  // t~ grid for diffusion-controlled runs; same grading plus a 2.5e-2
  // stretch up to t~ = 10 that smooths the step jump where the solution
  // still carries curvature
  static Mesh default_dc();

  struct Span {
    std::size_t first;  // index of the first node strictly inside the region
    std::size_t count;  // number of nodes in the region
    double step;
  };

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<MeshRegion>& regions() const { return regions_; }
  const std::vector<Span>& spans() const { return spans_; }
  std::size_t steps() const { return nodes_.size() - 1; }
  std::uint64_t hash() const { return hash_; }

 private:
  Mesh() = default;
  std::vector<double> nodes_;
  std::vector<MeshRegion> regions_;
  std::vector<Span> spans_;
  std::uint64_t hash_ = 0;
};

}  // namespace adsorb

#endif  // ADSORB_MESH_HPP_
