#pragma once

#include <vector>

#include "advcal/instance.hpp"

namespace advcal {

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    int cells = 1;
    double width() const { return (hi - lo) / cells; }
    double edge(int i) const { return lo + (hi - lo) * i / cells; }
};

struct CellBox {
    std::vector<double> lo;
    std::vector<double> hi;
};

// A piecewise-constant real-valued function on a uniform 1D/2D grid, plus a
// constant value outside the grid box. The function is the f being audited
// or trained; suprema over attack balls are computed exactly for it.
struct GridClassifier {
    std::vector<Axis> axes;      // size 1 or 2
    std::vector<double> values;  // flat, row-major (first axis major for 2D)
    double outside_value = 0.0;

    size_t dimension() const { return axes.size(); }
    size_t cell_count() const;
    void validate() const;

    size_t flat_index(const std::vector<int>& cell) const;
    CellBox cell_box(size_t flat) const;
    std::vector<double> cell_center(size_t flat) const;

    // Point evaluation. Interior edges belong to the higher cell; points
    // outside the box (beyond a 1e-12 slack) take outside_value.
    double value_at(const std::vector<double>& point) const;

    // Cells participating in the supremum over the closed ball B_eps(x):
    // those whose overlap with the ball has positive measure, decided as
    // closest-point distance <= eps - 1e-9 (single-point touching excluded).
    // For eps = 0 the ball is the point itself and its own cell is returned.
    std::vector<size_t> ball_cells(const std::vector<double>& x, Metric metric, double eps) const;

    // True when the ball's bounding box sits inside the grid box (1e-9 slack).
    bool covers_ball(const std::vector<double>& x, double eps) const;
};

// Uniform grid over the inflated bounding box of the instance atoms:
// box = atom bbox grown by epsilon plus one cell, cell width epsilon/10
// (0.5 when epsilon = 0).
GridClassifier auto_grid(const ProblemInstance& instance, double initial_value = 0.0);

GridClassifier constant_classifier(const ProblemInstance& instance, double value);

}  // namespace advcal
