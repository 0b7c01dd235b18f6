#pragma once

#include <Eigen/Dense>

#include <vector>

#include "ppacf/point_pattern.hpp"

namespace ppacf {

/// Partition of a region into d equal-measure cells: d subintervals for an
/// interval, or a rows×cols grid of equal-area rectangles. Cells are
/// half-open [lo, hi) per axis except the last cell, which is closed, so
/// every in-region point belongs to exactly one cell. Rectangle cells are
/// indexed row-major with rows along the y axis, row 0 at ylo.
class BinGrid {
public:
    const Region& region() const { return region_; }
    int cell_count() const { return rows_ * cols_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double cell_measure() const { return region_.measure() / cell_count(); }

    /// Index of the cell containing `p`; `p` must lie in the region.
    int cell_index(const Point& p) const;

    /// The j-th cell as a region of the same kind.
    Region cell(int j) const;

    friend BinGrid make_bin_grid(const Region& region, int d);
    friend BinGrid make_bin_grid(const Region& region, int rows, int cols);

private:
    BinGrid(Region region, int rows, int cols);

    Region region_;
    int rows_, cols_;
    std::vector<double> x_edges_;  // cols_ + 1 ascending edges
    std::vector<double> y_edges_;  // rows_ + 1 (rectangles only)
};

/// Equal split of an interval into d cells. Rectangles need rows×cols.
BinGrid make_bin_grid(const Region& region, int d);

/// rows×cols grid over a rectangle (rows==1 is also accepted for intervals).
BinGrid make_bin_grid(const Region& region, int rows, int cols);

/// The n×d nonnegative count matrix Y with rows Y_t, plus its grid.
struct BinnedCountSeries {
    Eigen::MatrixXi counts;
    BinGrid grid;

    int length() const { return static_cast<int>(counts.rows()); }
    int bins() const { return static_cast<int>(counts.cols()); }
};

/// Per-cell point counts of one pattern; entries sum to the pattern size.
Eigen::VectorXi bin_counts(const PointPattern& pattern, const BinGrid& grid);

/// Stacks bin_counts of every pattern into the n×d count matrix.
BinnedCountSeries bin_series(const PointPatternSeries& series,
                             const BinGrid& grid);

}  // namespace ppacf
