#include "ppacf/binning.hpp"

#include <algorithm>
#include <string>

namespace ppacf {

namespace {

// Edges lo + (hi-lo)*i/m with the endpoints pinned exactly to the bounds.
std::vector<double> equal_edges(double lo, double hi, int m) {
    std::vector<double> edges(static_cast<std::size_t>(m) + 1);
    const double span = hi - lo;
    for (int i = 0; i <= m; ++i) {
        edges[static_cast<std::size_t>(i)] =
            lo + span * static_cast<double>(i) / static_cast<double>(m);
    }
    edges.front() = lo;
    edges.back() = hi;
    return edges;
}

// Cell index along one axis: half-open cells [e_i, e_{i+1}) with the last
// cell closed at the upper bound.
int axis_index(const std::vector<double>& edges, double v) {
    const int m = static_cast<int>(edges.size()) - 1;
    auto it = std::upper_bound(edges.begin() + 1, edges.end(), v);
    int idx = static_cast<int>(it - edges.begin()) - 1;
    return std::min(idx, m - 1);
}

}  // namespace

BinGrid::BinGrid(Region region, int rows, int cols)
    : region_(region), rows_(rows), cols_(cols) {
    x_edges_ = equal_edges(region_.xlo(), region_.xhi(), cols_);
    if (region_.kind() == RegionKind::rectangle) {
        y_edges_ = equal_edges(region_.ylo(), region_.yhi(), rows_);
    }
}

int BinGrid::cell_index(const Point& p) const {
    const int col = axis_index(x_edges_, p.x);
    if (region_.kind() == RegionKind::interval) return col;
    const int row = axis_index(y_edges_, p.y);
    return row * cols_ + col;
}

Region BinGrid::cell(int j) const {
    if (j < 0 || j >= cell_count()) {
        throw invalid_argument("cell index " + std::to_string(j) +
                               " out of range for " +
                               std::to_string(cell_count()) + " cells");
    }
    if (region_.kind() == RegionKind::interval) {
        return Region::interval(x_edges_[static_cast<std::size_t>(j)],
                                x_edges_[static_cast<std::size_t>(j) + 1]);
    }
    const int row = j / cols_;
    const int col = j % cols_;
    return Region::rectangle(x_edges_[static_cast<std::size_t>(col)],
                             x_edges_[static_cast<std::size_t>(col) + 1],
                             y_edges_[static_cast<std::size_t>(row)],
                             y_edges_[static_cast<std::size_t>(row) + 1]);
}

BinGrid make_bin_grid(const Region& region, int d) {
    if (d < 1) {
        throw invalid_argument("bin count must be positive, got " +
                               std::to_string(d));
    }
    if (region.kind() == RegionKind::rectangle) {
        throw invalid_argument("a rectangle grid needs rows and cols, not a flat bin count");
    }
    return BinGrid(region, 1, d);
}

BinGrid make_bin_grid(const Region& region, int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw invalid_argument("grid rows and cols must be positive");
    }
    if (region.kind() == RegionKind::interval && rows != 1) {
        throw invalid_argument("interval regions only support a single row of cells");
    }
    return BinGrid(region, rows, cols);
}

Eigen::VectorXi bin_counts(const PointPattern& pattern, const BinGrid& grid) {
    if (!(pattern.region() == grid.region())) {
        throw invalid_argument("pattern region does not match the grid region");
    }
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(grid.cell_count());
    for (const Point& p : pattern.points()) {
        counts[grid.cell_index(p)] += 1;
    }
    return counts;
}

BinnedCountSeries bin_series(const PointPatternSeries& series,
                             const BinGrid& grid) {
    if (!(series.region() == grid.region())) {
        throw invalid_argument("series region does not match the grid region");
    }
    const int n = series.length();
    Eigen::MatrixXi counts(n, grid.cell_count());
    for (int t = 0; t < n; ++t) {
        counts.row(t) = bin_counts(series.patterns()[static_cast<std::size_t>(t)], grid).transpose();
    }
    return BinnedCountSeries{std::move(counts), grid};
}

}  // namespace ppacf
