#pragma once

#include <string>

#include "poncelet/conic_pair.hpp"
#include "poncelet/geometry.hpp"
#include "poncelet/loci.hpp"

namespace poncelet {

// Schematic SVG 1.1 plot: the pair's conics, the sampled locus, and the
// closed-form expected curve when one is available.
std::string locus_svg(const ConicPair& pair, const PointList& samples,
                      const std::optional<ExpectedLocus>& expected,
                      int width = 640, int height = 480);

}  // namespace poncelet
