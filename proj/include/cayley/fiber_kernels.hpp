#pragma once

// Fiber-size histograms of a torus-level map over F_p. The serial kernel is
// the reference (generic exact evaluation, ordered map of images); the
// parallel kernel compiles the map to flat modular arithmetic and
// partitions the first free coordinate across OpenMP threads.

#include <cstdint>
#include <map>

#include "cayley/cayley_engine.hpp"

namespace cay {

struct FiberHistogram {
  /// fiber size -> number of image points with that many preimages
  std::map<std::size_t, uint64_t> sizes;
  uint64_t defined_points = 0;
  uint64_t nonempty_fibers = 0;

  friend bool operator==(const FiberHistogram&, const FiberHistogram&) = default;
};

/// The candidate must already be over F_p with p < 2^31.
FiberHistogram fiber_histogram_serial(const MapCandidate& c);
FiberHistogram fiber_histogram_parallel(const MapCandidate& c);

/// Number of worker threads the parallel kernel will use.
int fiber_worker_count();

}  // namespace cay
