#include <doctest.h>

#include <random>

#include "ppacf/binning.hpp"

using namespace ppacf;

TEST_CASE("interval grids split the region into equal cells") {
    const Region unit = Region::interval(0.0, 1.0);

    SUBCASE("identity partition") {
        const BinGrid g = make_bin_grid(unit, 1);
        CHECK(g.cell_count() == 1);
        CHECK(g.cell(0) == unit);
    }
    SUBCASE("five equal cells") {
        const BinGrid g = make_bin_grid(unit, 5);
        CHECK(g.cell_count() == 5);
        CHECK(g.cell(0).xlo() == doctest::Approx(0.0));
        CHECK(g.cell(0).xhi() == doctest::Approx(0.2));
        CHECK(g.cell(4).xlo() == doctest::Approx(0.8));
        CHECK(g.cell(4).xhi() == 1.0);  // endpoint pinned exactly
        for (int j = 0; j < 5; ++j) {
            CHECK(g.cell(j).measure() == doctest::Approx(0.2));
        }
    }
    SUBCASE("invalid bin counts") {
        CHECK_THROWS_AS(make_bin_grid(unit, 0), invalid_argument);
        CHECK_THROWS_AS(make_bin_grid(unit, -3), invalid_argument);
    }
}

TEST_CASE("rectangle grids are row-major with equal areas") {
    const Region square = Region::rectangle(0.0, 1.0, 0.0, 1.0);
    const BinGrid g = make_bin_grid(square, 3, 3);
    CHECK(g.cell_count() == 9);
    for (int j = 0; j < 9; ++j) {
        CHECK(g.cell(j).measure() == doctest::Approx(1.0 / 9.0));
    }
    // row 0 spans the lowest y band, columns advance along x
    CHECK(g.cell_index({0.1, 0.1}) == 0);
    CHECK(g.cell_index({0.5, 0.1}) == 1);
    CHECK(g.cell_index({0.1, 0.5}) == 3);
    CHECK(g.cell_index({0.9, 0.9}) == 8);

    CHECK_THROWS_AS(make_bin_grid(square, 5), invalid_argument);
    CHECK_THROWS_AS(make_bin_grid(square, 0, 3), invalid_argument);
}

TEST_CASE("bin_counts matches hand enumeration") {
    const Region unit = Region::interval(0.0, 1.0);

    SUBCASE("three points, two cells") {
        // 0.5 sits exactly on the cell edge and belongs to the right cell
        // under the half-open convention
        const PointPattern p(unit, {{0.1}, {0.5}, {0.9}});
        const Eigen::VectorXi c = bin_counts(p, make_bin_grid(unit, 2));
        CHECK(c[0] == 1);
        CHECK(c[1] == 2);
    }
    SUBCASE("three interior points, two cells") {
        const PointPattern p(unit, {{0.1}, {0.45}, {0.9}});
        const Eigen::VectorXi c = bin_counts(p, make_bin_grid(unit, 2));
        CHECK(c[0] == 2);
        CHECK(c[1] == 1);
    }
    SUBCASE("empty pattern") {
        const PointPattern p(unit, {});
        CHECK(bin_counts(p, make_bin_grid(unit, 4)).isZero());
    }
    SUBCASE("interior boundary point goes to the right cell") {
        const PointPattern p(unit, {{0.2}});
        const Eigen::VectorXi c = bin_counts(p, make_bin_grid(unit, 5));
        CHECK(c[0] == 0);
        CHECK(c[1] == 1);
        CHECK(c.sum() == 1);
    }
    SUBCASE("upper region boundary point is kept, in the last cell") {
        const PointPattern p(unit, {{1.0}});
        const Eigen::VectorXi c = bin_counts(p, make_bin_grid(unit, 5));
        CHECK(c[4] == 1);
    }
    SUBCASE("region mismatch") {
        const PointPattern p(unit, {{0.5}});
        const BinGrid other = make_bin_grid(Region::interval(0.0, 2.0), 2);
        CHECK_THROWS_AS(bin_counts(p, other), invalid_argument);
    }
}

TEST_CASE("bin_series stacks per-pattern counts") {
    const Region unit = Region::interval(0.0, 1.0);
    const BinGrid g = make_bin_grid(unit, 2);

    SUBCASE("all empty") {
        std::vector<PointPattern> ps(3, PointPattern(unit, {}));
        const BinnedCountSeries y = bin_series(PointPatternSeries(ps), g);
        CHECK(y.counts.rows() == 3);
        CHECK(y.counts.isZero());
    }
    SUBCASE("single pattern") {
        const PointPattern p(unit, {{0.1}, {0.9}});
        const BinnedCountSeries y =
            bin_series(PointPatternSeries({p}), g);
        CHECK(y.counts.row(0).transpose() == bin_counts(p, g));
    }
    SUBCASE("two patterns") {
        const PointPatternSeries s(
            {PointPattern(unit, {{0.1}}), PointPattern(unit, {{0.9}})});
        const BinnedCountSeries y = bin_series(s, g);
        CHECK(y.counts(0, 0) == 1);
        CHECK(y.counts(0, 1) == 0);
        CHECK(y.counts(1, 0) == 0);
        CHECK(y.counts(1, 1) == 1);
    }
}

TEST_CASE("restrict keeps exactly the points inside the sub-region") {
    const Region unit = Region::interval(0.0, 1.0);
    const PointPattern p(unit, {{0.1}, {0.6}});

    SUBCASE("full region is the identity") {
        const PointPattern r = restrict(p, unit);
        CHECK(r.points() == p.points());
        CHECK(r.region() == unit);
    }
    SUBCASE("half region") {
        const PointPattern r = restrict(p, Region::interval(0.5, 1.0));
        REQUIRE(r.size() == 1);
        CHECK(r.points()[0].x == 0.6);
    }
    SUBCASE("empty pattern stays empty") {
        const PointPattern e(unit, {});
        CHECK(restrict(e, Region::interval(0.2, 0.4)).size() == 0);
    }
    SUBCASE("non-contained sub-region") {
        CHECK_THROWS_AS(restrict(p, Region::interval(0.5, 1.5)),
                        invalid_argument);
    }
}

TEST_CASE("partition and restriction properties on random patterns") {
    std::mt19937 gen(1234);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::uniform_int_distribution<int> npts(0, 60);
    std::uniform_int_distribution<int> nbins(1, 12);
    const Region unit = Region::interval(0.0, 1.0);

    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Point> pts(static_cast<std::size_t>(npts(gen)));
        for (auto& p : pts) p.x = coord(gen);
        const PointPattern pat(unit, pts);
        const BinGrid g = make_bin_grid(unit, nbins(gen));
        const Eigen::VectorXi c = bin_counts(pat, g);

        // cell counts sum to the total point count
        CHECK(static_cast<std::size_t>(c.sum()) == pat.size());

        // each cell count equals the size of the pattern restricted to it
        for (int j = 0; j < g.cell_count(); ++j) {
            CHECK(restrict(pat, g.cell(j)).size() ==
                  static_cast<std::size_t>(c[j]));
        }
    }
}

TEST_CASE("restrict then bin agrees with the matching cells of the full grid") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    const Region unit = Region::interval(0.0, 1.0);

    std::vector<Point> pts(200);
    for (auto& p : pts) p.x = coord(gen);
    const PointPattern pat(unit, pts);

    const BinGrid full = make_bin_grid(unit, 10);
    const Region sub = Region::interval(0.2, 0.7);
    const BinGrid subgrid = make_bin_grid(sub, 5);
    const Eigen::VectorXi c_full = bin_counts(pat, full);
    const Eigen::VectorXi c_sub = bin_counts(restrict(pat, sub), subgrid);
    for (int j = 0; j < 5; ++j) {
        CHECK(c_sub[j] == c_full[j + 2]);
    }
}
