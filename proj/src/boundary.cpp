#include "tsetlin/boundary.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tsetlin/errors.hpp"

namespace tsetlin {

namespace {

double lerp_step(double lo, double hi, int i, int resolution) {
    if (resolution == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);
}

// Vote margin of a prediction: distance of the decision from flipping.
std::int64_t margin_of(const Prediction& p) {
    if (p.votes.size() == 1) return p.votes[0];
    std::int64_t best = p.votes[static_cast<std::size_t>(p.label)];
    std::int64_t runner_up = std::numeric_limits<std::int64_t>::min();
    for (std::size_t c = 0; c < p.votes.size(); ++c) {
        if (static_cast<int>(c) == p.label) continue;
        runner_up = std::max(runner_up, p.votes[c]);
    }
    return best - runner_up;
}

}  // namespace

GridSpec GridSpec::for_model(const TMModel& model, int feature_x, int feature_y,
                             int resolution) {
    GridSpec spec;
    spec.feature_x = feature_x;
    spec.feature_y = feature_y;
    spec.resolution = resolution;
    spec.fixed = model.feature_mean;
    const auto in_range = [&](int f) {
        return f >= 0 && f < static_cast<int>(model.feature_min.size());
    };
    if (!in_range(feature_x) || !in_range(feature_y))
        throw InputError("boundary axes must name raw features of the model");
    spec.x_min = model.feature_min[static_cast<std::size_t>(feature_x)];
    spec.x_max = model.feature_max[static_cast<std::size_t>(feature_x)];
    spec.y_min = model.feature_min[static_cast<std::size_t>(feature_y)];
    spec.y_max = model.feature_max[static_cast<std::size_t>(feature_y)];
    return spec;
}

void GridSpec::validate(int n_features) const {
    if (feature_x < 0 || feature_x >= n_features || feature_y < 0 || feature_y >= n_features)
        throw InputError("boundary axes must be feature indices in [0, " +
                         std::to_string(n_features) + ")");
    if (feature_x == feature_y) throw InputError("boundary axes must differ");
    if (resolution < 2) throw InputError("resolution must be >= 2");
    if (!(x_min < x_max) || !(y_min < y_max))
        throw InputError("boundary ranges must have positive extent");
    if (static_cast<int>(fixed.size()) != n_features)
        throw InputError("fixed row must have one value per raw feature");
}

std::vector<GridCell> grid_eval(const TMModel& model, const GridSpec& spec) {
    spec.validate(model.binarizer.raw_features());

    std::vector<GridCell> cells;
    cells.reserve(static_cast<std::size_t>(spec.resolution) *
                  static_cast<std::size_t>(spec.resolution));
    std::vector<double> row = spec.fixed;
    for (int iy = 0; iy < spec.resolution; ++iy) {
        const double y = lerp_step(spec.y_min, spec.y_max, iy, spec.resolution);
        row[static_cast<std::size_t>(spec.feature_y)] = y;
        for (int ix = 0; ix < spec.resolution; ++ix) {
            const double x = lerp_step(spec.x_min, spec.x_max, ix, spec.resolution);
            row[static_cast<std::size_t>(spec.feature_x)] = x;
            const Prediction p = model.predict_raw(row);
            cells.push_back({x, y, p.label, margin_of(p)});
        }
    }
    return cells;
}

std::string grid_to_csv(const std::vector<GridCell>& cells) {
    std::ostringstream out;
    out << "x,y,label,margin\n";
    for (const GridCell& c : cells)
        out << c.x << ',' << c.y << ',' << c.label << ',' << c.margin << '\n';
    return out.str();
}

std::string grid_to_pgm(const std::vector<GridCell>& cells, int resolution) {
    if (resolution < 1 ||
        cells.size() != static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution))
        throw InputError("grid_to_pgm: cell count does not match the resolution");

    std::int64_t lo = cells.front().margin, hi = lo;
    for (const GridCell& c : cells) {
        lo = std::min(lo, c.margin);
        hi = std::max(hi, c.margin);
    }

    std::ostringstream out;
    out << "P5\n" << resolution << ' ' << resolution << "\n255\n";
    // Image rows go top-down, grid rows bottom-up; flip vertically.
    for (int iy = resolution - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const GridCell& c = cells[static_cast<std::size_t>(iy) *
                                          static_cast<std::size_t>(resolution) +
                                      static_cast<std::size_t>(ix)];
            int gray = 128;
            if (hi > lo)
                gray = static_cast<int>(255.0 * static_cast<double>(c.margin - lo) /
                                        static_cast<double>(hi - lo));
            out << static_cast<char>(std::clamp(gray, 0, 255));
        }
    }
    return out.str();
}

}  // namespace tsetlin
