#pragma once

#include <vector>

#include "hikeforge/report.hpp"

namespace hikeforge {

/// The curated worked examples: the crossed-pentagon Mobius series
/// term-for-term, the two von Mangoldt values by both routes, the
/// dependence-graph reconstruction demo, and the two cospectral fixtures.
std::vector<CheckReport> worked_examples();

}  // namespace hikeforge
