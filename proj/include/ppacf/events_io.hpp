#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "ppacf/estimator.hpp"
#include "ppacf/point_pattern.hpp"

namespace ppacf {

/// One CSV row: slice index t >= 1 plus 1 (temporal) or 2 (spatial)
/// coordinates.
struct EventRecord {
    int t{0};
    Point coords;
};

struct LoadedEvents {
    PointPatternSeries series;
    std::size_t dropped_outside{0};  // points outside the region, not loaded
};

/**
 * Reads an event CSV (header `t,s` or `t,x,y`, UTF-8, comma separated,
 * `.` decimal) and groups rows into a series of length n = max t. Missing
 * t values yield empty patterns; points outside `region` are dropped and
 * counted. Unparseable rows, non-finite coordinates, t < 1, or a column
 * count that does not match the header raise invalid_argument naming the
 * line.
 */
LoadedEvents read_events(const std::filesystem::path& path,
                         const Region& region);

/// Writes the series in the same CSV format, coordinates at full precision.
void write_events(const PointPatternSeries& series,
                  const std::filesystem::path& path);

enum class AcfFormat { csv, json };

/// CSV columns `lag,rho_hat,upper_bound` (empty upper_bound when absent) or
/// the JSON mirror with a meta block. Values round-trip at full precision.
void write_autocorrelogram(const Autocorrelogram& acf,
                           const std::filesystem::path& path,
                           AcfFormat format);

std::string autocorrelogram_csv(const Autocorrelogram& acf);
std::string autocorrelogram_json(const Autocorrelogram& acf);

}  // namespace ppacf
