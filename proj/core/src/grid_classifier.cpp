#include "advcal/grid_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace advcal {

namespace {
constexpr double kOverlapTol = 1e-9;   // minimum overlap depth that counts as intersecting
constexpr double kCoverTol = 1e-9;
constexpr double kPointTol = 1e-12;
}  // namespace

size_t GridClassifier::cell_count() const {
    size_t total = 1;
    for (const Axis& axis : axes) total *= static_cast<size_t>(axis.cells);
    return total;
}

void GridClassifier::validate() const {
    if (axes.empty() || axes.size() > 2) {
        throw std::invalid_argument("grid: dimension must be 1 or 2");
    }
    for (const Axis& axis : axes) {
        if (!(axis.lo < axis.hi)) throw std::invalid_argument("grid: axis needs lo < hi");
        if (axis.cells < 1) throw std::invalid_argument("grid: axis needs at least one cell");
    }
    if (values.size() != cell_count()) {
        throw std::invalid_argument("grid: value array size does not match the cell count");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("grid: cell values must be finite");
    }
    if (!std::isfinite(outside_value)) throw std::invalid_argument("grid: outside value must be finite");
}

size_t GridClassifier::flat_index(const std::vector<int>& cell) const {
    if (axes.size() == 1) return static_cast<size_t>(cell[0]);
    return static_cast<size_t>(cell[0]) * static_cast<size_t>(axes[1].cells) + static_cast<size_t>(cell[1]);
}

CellBox GridClassifier::cell_box(size_t flat) const {
    CellBox box;
    if (axes.size() == 1) {
        int i = static_cast<int>(flat);
        box.lo = {axes[0].edge(i)};
        box.hi = {axes[0].edge(i + 1)};
    } else {
        int ny = axes[1].cells;
        int ix = static_cast<int>(flat) / ny;
        int iy = static_cast<int>(flat) % ny;
        box.lo = {axes[0].edge(ix), axes[1].edge(iy)};
        box.hi = {axes[0].edge(ix + 1), axes[1].edge(iy + 1)};
    }
    return box;
}

std::vector<double> GridClassifier::cell_center(size_t flat) const {
    CellBox box = cell_box(flat);
    std::vector<double> center(box.lo.size());
    for (size_t k = 0; k < center.size(); ++k) center[k] = 0.5 * (box.lo[k] + box.hi[k]);
    return center;
}

double GridClassifier::value_at(const std::vector<double>& point) const {
    if (point.size() != axes.size()) throw std::invalid_argument("grid: point dimension mismatch");
    std::vector<int> cell(axes.size());
    for (size_t k = 0; k < axes.size(); ++k) {
        const Axis& axis = axes[k];
        if (point[k] < axis.lo - kPointTol || point[k] > axis.hi + kPointTol) return outside_value;
        int i = static_cast<int>(std::floor((point[k] - axis.lo) / axis.width()));
        cell[k] = std::clamp(i, 0, axis.cells - 1);
    }
    return values[flat_index(cell)];
}

std::vector<size_t> GridClassifier::ball_cells(const std::vector<double>& x, Metric metric, double eps) const {
    if (x.size() != axes.size()) throw std::invalid_argument("grid: point dimension mismatch");
    if (!covers_ball(x, eps)) {
        throw std::domain_error("grid: attack ball is not covered by the grid box");
    }

    if (eps == 0.0) {
        std::vector<int> cell(axes.size());
        for (size_t k = 0; k < axes.size(); ++k) {
            const Axis& axis = axes[k];
            int i = static_cast<int>(std::floor((x[k] - axis.lo) / axis.width()));
            cell[k] = std::clamp(i, 0, axis.cells - 1);
        }
        return {flat_index(cell)};
    }

    // Candidate index window per axis, then the exact closest-point test.
    std::vector<int> first(axes.size()), last(axes.size());
    for (size_t k = 0; k < axes.size(); ++k) {
        const Axis& axis = axes[k];
        double w = axis.width();
        first[k] = std::clamp(static_cast<int>(std::floor((x[k] - eps - axis.lo) / w)) - 1, 0, axis.cells - 1);
        last[k] = std::clamp(static_cast<int>(std::floor((x[k] + eps - axis.lo) / w)) + 1, 0, axis.cells - 1);
    }

    auto axial_gap = [&](size_t k, int i) {
        const Axis& axis = axes[k];
        double lo = axis.edge(i);
        double hi = axis.edge(i + 1);
        return std::max({lo - x[k], x[k] - hi, 0.0});
    };

    std::vector<size_t> cells;
    if (axes.size() == 1) {
        for (int i = first[0]; i <= last[0]; ++i) {
            if (axial_gap(0, i) <= eps - kOverlapTol) cells.push_back(static_cast<size_t>(i));
        }
        return cells;
    }
    for (int i = first[0]; i <= last[0]; ++i) {
        double gx = axial_gap(0, i);
        for (int j = first[1]; j <= last[1]; ++j) {
            double gy = axial_gap(1, j);
            double gap = metric == Metric::euclidean ? std::hypot(gx, gy) : std::max(gx, gy);
            if (gap <= eps - kOverlapTol) {
                cells.push_back(flat_index({i, j}));
            }
        }
    }
    return cells;
}

bool GridClassifier::covers_ball(const std::vector<double>& x, double eps) const {
    for (size_t k = 0; k < axes.size(); ++k) {
        if (x[k] - eps < axes[k].lo - kCoverTol || x[k] + eps > axes[k].hi + kCoverTol) return false;
    }
    return true;
}

GridClassifier auto_grid(const ProblemInstance& instance, double initial_value) {
    instance.validate();
    size_t dim = instance.dimension();
    if (dim > 2) throw std::invalid_argument("auto_grid: only 1D and 2D instances are supported");
    double w = instance.epsilon > 0.0 ? instance.epsilon / 10.0 : 0.5;

    GridClassifier grid;
    for (size_t k = 0; k < dim; ++k) {
        double lo = instance.atoms.front().x[k];
        double hi = lo;
        for (const Atom& atom : instance.atoms) {
            lo = std::min(lo, atom.x[k]);
            hi = std::max(hi, atom.x[k]);
        }
        lo = lo - instance.epsilon - w;
        hi = hi + instance.epsilon + w;
        int cells = static_cast<int>(std::ceil((hi - lo) / w - 1e-9));
        grid.axes.push_back({lo, lo + cells * w, cells});
    }
    grid.values.assign(grid.cell_count(), initial_value);
    grid.outside_value = initial_value;
    grid.validate();
    return grid;
}

GridClassifier constant_classifier(const ProblemInstance& instance, double value) {
    return auto_grid(instance, value);
}

}  // namespace advcal
