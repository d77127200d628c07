#pragma once

#include <hypack/region.hpp>

#include <cstdint>

namespace hypack {

// Disk in the coordinate plane. Hyperbolic balls enter here through their
// Euclidean realization.
struct Disk {
    double cx = 0, cy = 0, r = 0;
};

// Measure of region ∩ disk: Lebesgue in euclidean mode, ∫∫ dx dy / y^2 in
// hyperbolic mode. Vertical-slab integration: the y-integral per slab is
// analytic, the x-direction is integrated adaptively to the absolute
// tolerance abs_tol. Deterministic for fixed inputs and thread count
// independent.
double region_disk_measure(const RectRegion& region, const Disk& disk, Mode mode,
                           double abs_tol);

// Monte Carlo estimate of measure(region ∩ disk) / measure(disk): samples
// are measure-uniform in the disk, chunked so the estimate is independent of
// the thread schedule.
struct McEstimate {
    double fraction = 0;
    double stderr_ = 0;
    std::int64_t samples = 0;
    std::int64_t accepted = 0;
    std::uint64_t seed = 0;
};

McEstimate mc_disk_fraction(const RectRegion& region, const Disk& disk, Mode mode,
                            std::int64_t samples, std::uint64_t seed);

}  // namespace hypack
