#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppacf/errors.hpp"

namespace ppacf {

/// A location in the observation region. For interval (temporal) regions
/// only `x` is meaningful and `y` stays 0.
struct Point {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point&, const Point&) = default;
};

enum class RegionKind { interval, rectangle };

/// Bounded observation region: an interval [lo, hi] or an axis-aligned
/// rectangle [xlo, xhi] × [ylo, yhi]. Membership is closed on both
/// boundaries, so points on the upper edge are kept.
class Region {
public:
    static Region interval(double lo, double hi);
    static Region rectangle(double xlo, double xhi, double ylo, double yhi);

    RegionKind kind() const { return kind_; }
    double xlo() const { return xlo_; }
    double xhi() const { return xhi_; }
    double ylo() const { return ylo_; }
    double yhi() const { return yhi_; }

    /// Interval length or rectangle area.
    double measure() const;

    bool contains(const Point& p) const;
    /// True when `sub` is of the same kind and lies inside this region.
    bool contains(const Region& sub) const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    Region(RegionKind kind, double xlo, double xhi, double ylo, double yhi);

    RegionKind kind_;
    double xlo_, xhi_, ylo_, yhi_;
};

/// A finite point pattern: one realization of a point process restricted to
/// a region. Immutable after construction; construction validates that every
/// point lies inside the region.
class PointPattern {
public:
    PointPattern(Region region, std::vector<Point> points);

    const Region& region() const { return region_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    Region region_;
    std::vector<Point> points_;
};

/// An ordered series of point patterns over a shared region; index t = 1..n
/// corresponds to equally spaced slices (e.g. days).
class PointPatternSeries {
public:
    explicit PointPatternSeries(std::vector<PointPattern> patterns);

    const Region& region() const { return patterns_.front().region(); }
    const std::vector<PointPattern>& patterns() const { return patterns_; }
    int length() const { return static_cast<int>(patterns_.size()); }

private:
    std::vector<PointPattern> patterns_;
};

/// Keeps exactly the points of `pattern` inside `sub` and re-homes them on
/// `sub`. `sub` must be contained in the pattern's region.
PointPattern restrict(const PointPattern& pattern, const Region& sub);

}  // namespace ppacf
