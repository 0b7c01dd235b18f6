#include "ppacf/point_pattern.hpp"

#include <string>
#include <utility>

namespace ppacf {

Region::Region(RegionKind kind, double xlo, double xhi, double ylo, double yhi)
    : kind_(kind), xlo_(xlo), xhi_(xhi), ylo_(ylo), yhi_(yhi) {}

Region Region::interval(double lo, double hi) {
    if (!(lo < hi)) {
        throw invalid_argument("interval region requires lo < hi, got [" +
                               std::to_string(lo) + ", " + std::to_string(hi) +
                               "]");
    }
    return Region(RegionKind::interval, lo, hi, 0.0, 0.0);
}

Region Region::rectangle(double xlo, double xhi, double ylo, double yhi) {
    if (!(xlo < xhi) || !(ylo < yhi)) {
        throw invalid_argument("rectangle region requires lo < hi on each axis");
    }
    return Region(RegionKind::rectangle, xlo, xhi, ylo, yhi);
}

double Region::measure() const {
    const double dx = xhi_ - xlo_;
    return kind_ == RegionKind::interval ? dx : dx * (yhi_ - ylo_);
}

bool Region::contains(const Point& p) const {
    if (p.x < xlo_ || p.x > xhi_) return false;
    if (kind_ == RegionKind::rectangle && (p.y < ylo_ || p.y > yhi_))
        return false;
    return true;
}

bool Region::contains(const Region& sub) const {
    if (sub.kind_ != kind_) return false;
    if (sub.xlo_ < xlo_ || sub.xhi_ > xhi_) return false;
    if (kind_ == RegionKind::rectangle &&
        (sub.ylo_ < ylo_ || sub.yhi_ > yhi_))
        return false;
    return true;
}

PointPattern::PointPattern(Region region, std::vector<Point> points)
    : region_(region), points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!region_.contains(points_[i])) {
            throw invalid_argument("point " + std::to_string(i) +
                                   " lies outside the pattern region");
        }
    }
}

PointPatternSeries::PointPatternSeries(std::vector<PointPattern> patterns)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty()) {
        throw invalid_argument("a point-pattern series needs at least one pattern");
    }
    const Region& shared = patterns_.front().region();
    for (const auto& p : patterns_) {
        if (!(p.region() == shared)) {
            throw invalid_argument("all patterns in a series must share one region");
        }
    }
}

PointPattern restrict(const PointPattern& pattern, const Region& sub) {
    if (!pattern.region().contains(sub)) {
        throw invalid_argument("restriction region is not contained in the pattern region");
    }
    std::vector<Point> kept;
    for (const Point& p : pattern.points()) {
        if (sub.contains(p)) kept.push_back(p);
    }
    return PointPattern(sub, std::move(kept));
}

}  // namespace ppacf
