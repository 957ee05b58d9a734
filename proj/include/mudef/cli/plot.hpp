#pragma once

#include <string>
#include <vector>

#include "mudef/trace/scan.hpp"

namespace mudef::cli {

/// Static SVG of the relative deviation (value - product) / product against mu,
/// one polyline per interval pair. The mu < 0 (conjectured) region is shaded
/// and mu = 0 (equality) is marked. Failed rows are skipped.
std::string scan_plot_svg(const std::vector<trace::ScanRow>& rows);

}  // namespace mudef::cli
