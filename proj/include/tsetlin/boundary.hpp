#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsetlin/model_store.hpp"

namespace tsetlin {

// A 2D slice through feature space: two axes sweep their ranges, every other
// feature is pinned to the values in `fixed`.
struct GridSpec {
    int feature_x = 0;
    int feature_y = 1;
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int resolution = 128;       // points per axis, endpoints included
    std::vector<double> fixed;  // template row; entries at the axes are ignored

    // Defaults the ranges to the model's training ranges and the fixed row
    // to the training means.
    static GridSpec for_model(const TMModel& model, int feature_x, int feature_y,
                              int resolution);

    void validate(int n_features) const;  // throws InputError
};

struct GridCell {
    double x = 0.0;
    double y = 0.0;
    int label = 0;
    std::int64_t margin = 0;  // binary: the vote sum; multiclass: best minus runner-up
};

// Evaluates the model over the grid, x fastest, y slowest (row by row from
// y_min). resolution^2 cells.
std::vector<GridCell> grid_eval(const TMModel& model, const GridSpec& spec);

// CSV with the exact header "x,y,label,margin".
std::string grid_to_csv(const std::vector<GridCell>& cells);

// 8-bit binary PGM of the margin, mapped linearly onto 0..255 (a flat grid
// renders mid-gray). Rows run top-to-bottom from y_max, the usual image
// orientation.
std::string grid_to_pgm(const std::vector<GridCell>& cells, int resolution);

}  // namespace tsetlin
