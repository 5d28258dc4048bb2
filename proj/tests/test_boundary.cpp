#include <cstddef>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tsetlin/boundary.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/model_store.hpp"

using namespace tsetlin;
using tsetlin::test::machine_from_ids;

namespace {

// Binary model over two raw features, one 0.5 cut each. The positive clause
// wants bit 0 (weight 2), the negative clause wants bit 1 (weight 1), so the
// vote at raw (x, y) is 2*[x > 0.5] - [y > 0.5].
TMModel toy_model() {
    TMModel model;
    model.config.n_clauses = 2;
    model.machines = {machine_from_ids(2, 5, {{0}, {1}}, {2, 1}, 15)};
    model.binarizer.thresholds = {{0.5}, {0.5}};
    model.class_names = {"no", "yes"};
    model.feature_names = {"fx", "fy"};
    model.bit_names = {"fx>0.5", "fy>0.5"};
    model.feature_min = {0.0, 0.0};
    model.feature_max = {1.0, 1.0};
    model.feature_mean = {0.25, 0.75};
    return model;
}

}  // namespace

TEST_CASE("for_model defaults to the training ranges and means") {
    const TMModel model = toy_model();
    const GridSpec spec = GridSpec::for_model(model, 0, 1, 16);
    CHECK(spec.feature_x == 0);
    CHECK(spec.feature_y == 1);
    CHECK(spec.resolution == 16);
    CHECK(spec.x_min == 0.0);
    CHECK(spec.x_max == 1.0);
    CHECK(spec.y_min == 0.0);
    CHECK(spec.y_max == 1.0);
    CHECK(spec.fixed == model.feature_mean);

    CHECK_THROWS_AS(GridSpec::for_model(model, 0, 2, 16), InputError);
    CHECK_THROWS_AS(GridSpec::for_model(model, -1, 1, 16), InputError);
}

TEST_CASE("validate rejects malformed grid specs") {
    const TMModel model = toy_model();
    GridSpec good = GridSpec::for_model(model, 0, 1, 4);
    CHECK_NOTHROW(good.validate(2));

    GridSpec s = good;
    s.feature_y = 0;  // same axis twice
    CHECK_THROWS_AS(s.validate(2), InputError);

    s = good;
    s.feature_x = 2;
    CHECK_THROWS_AS(s.validate(2), InputError);

    s = good;
    s.resolution = 1;
    CHECK_THROWS_AS(s.validate(2), InputError);

    s = good;
    s.x_max = s.x_min;  // empty extent
    CHECK_THROWS_AS(s.validate(2), InputError);

    s = good;
    s.fixed = {0.5};  // one value short
    CHECK_THROWS_AS(s.validate(2), InputError);
}

TEST_CASE("grid cells sweep x fastest from the bottom row up") {
    const TMModel model = toy_model();
    GridSpec spec = GridSpec::for_model(model, 0, 1, 2);
    const std::vector<GridCell> cells = grid_eval(model, spec);
    REQUIRE(cells.size() == 4);

    // Corners in order: (0,0), (1,0), (0,1), (1,1).
    CHECK(cells[0].x == 0.0);
    CHECK(cells[0].y == 0.0);
    CHECK(cells[1].x == 1.0);
    CHECK(cells[1].y == 0.0);
    CHECK(cells[2].x == 0.0);
    CHECK(cells[2].y == 1.0);
    CHECK(cells[3].x == 1.0);
    CHECK(cells[3].y == 1.0);

    // Votes 0, 2, -1, 1; label 1 needs vote >= 1.
    CHECK(cells[0].label == 0);
    CHECK(cells[0].margin == 0);
    CHECK(cells[1].label == 1);
    CHECK(cells[1].margin == 2);
    CHECK(cells[2].label == 0);
    CHECK(cells[2].margin == -1);
    CHECK(cells[3].label == 1);
    CHECK(cells[3].margin == 1);

    // Every cell agrees with a direct prediction at its coordinates.
    for (const GridCell& c : cells) {
        const Prediction p = model.predict_raw({c.x, c.y});
        CHECK(c.label == p.label);
    }
}

TEST_CASE("features off the grid axes stay pinned to the fixed row") {
    // Third feature drives the single live clause pair: z above its cut
    // fires the positive clause, z below fires the negative one.
    TMModel model;
    model.config.n_clauses = 2;
    model.machines = {machine_from_ids(3, 5, {{2}, {5}}, {1, 1}, 15)};
    model.binarizer.thresholds = {{0.5}, {0.5}, {0.5}};
    model.class_names = {"no", "yes"};
    model.feature_names = {"fx", "fy", "fz"};
    model.bit_names = {"fx>0.5", "fy>0.5", "fz>0.5"};
    model.feature_min = {0.0, 0.0, 0.0};
    model.feature_max = {1.0, 1.0, 1.0};
    model.feature_mean = {0.5, 0.5, 0.5};

    GridSpec spec = GridSpec::for_model(model, 0, 1, 3);
    spec.fixed[2] = 1.0;
    for (const GridCell& c : grid_eval(model, spec)) {
        CHECK(c.label == 1);
        CHECK(c.margin == 1);
    }

    spec.fixed[2] = 0.0;
    for (const GridCell& c : grid_eval(model, spec)) {
        CHECK(c.label == 0);
        CHECK(c.margin == -1);
    }
}

TEST_CASE("multiclass margins are the winner's lead over the runner-up") {
    // Three one-vs-rest machines; class c votes c+1 whenever x > 0.5 (the
    // negative clauses carry weight zero and never matter).
    TMModel model;
    model.config.n_clauses = 2;
    for (int c = 0; c < 3; ++c)
        model.machines.push_back(machine_from_ids(2, 5, {{0}, {3}}, {c + 1, 0}, 15));
    model.binarizer.thresholds = {{0.5}, {0.5}};
    model.class_names = {"a", "b", "c"};
    model.feature_names = {"fx", "fy"};
    model.bit_names = {"fx>0.5", "fy>0.5"};
    model.feature_min = {0.0, 0.0};
    model.feature_max = {1.0, 1.0};
    model.feature_mean = {0.5, 0.5};

    const GridSpec spec = GridSpec::for_model(model, 0, 1, 2);
    const std::vector<GridCell> cells = grid_eval(model, spec);
    REQUIRE(cells.size() == 4);
    for (const GridCell& c : cells) {
        if (c.x > 0.5) {
            CHECK(c.label == 2);   // votes 1, 2, 3
            CHECK(c.margin == 1);  // 3 - 2
        } else {
            CHECK(c.label == 0);   // all-zero votes tie toward class 0
            CHECK(c.margin == 0);
        }
    }
}

TEST_CASE("grid CSV carries the fixed header and one line per cell") {
    const TMModel model = toy_model();
    GridSpec spec = GridSpec::for_model(model, 0, 1, 2);
    const std::string csv = grid_to_csv(grid_eval(model, spec));

    CHECK(csv.rfind("x,y,label,margin\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 5);  // header + 4 cells
    CHECK(csv.find("0,0,0,0\n") != std::string::npos);
    CHECK(csv.find("1,0,1,2\n") != std::string::npos);
    CHECK(csv.find("0,1,0,-1\n") != std::string::npos);
}

TEST_CASE("the PGM maps margins onto 0..255 with image row order") {
    const TMModel model = toy_model();
    GridSpec spec = GridSpec::for_model(model, 0, 1, 2);
    const std::string pgm = grid_to_pgm(grid_eval(model, spec), 2);

    const std::string header = "P5\n2 2\n255\n";
    REQUIRE(pgm.size() == header.size() + 4);
    CHECK(pgm.rfind(header, 0) == 0);

    // Margins by grid row: bottom (0, 2), top (-1, 1); range [-1, 2]. The
    // image starts at the top row, so bytes run (-1, 1, 0, 2) rescaled.
    const auto px = [&](std::size_t i) {
        return static_cast<unsigned char>(pgm[header.size() + i]);
    };
    CHECK(px(0) == 0);
    CHECK(px(1) == 170);
    CHECK(px(2) == 85);
    CHECK(px(3) == 255);
}

TEST_CASE("a flat margin field renders mid-gray") {
    TMModel model = toy_model();
    model.machines[0].weights = {0, 0};  // no clause can move the vote
    GridSpec spec = GridSpec::for_model(model, 0, 1, 2);
    const std::string pgm = grid_to_pgm(grid_eval(model, spec), 2);
    const std::string header = "P5\n2 2\n255\n";
    REQUIRE(pgm.size() == header.size() + 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(static_cast<unsigned char>(pgm[header.size() + i]) == 128);
}

TEST_CASE("the PGM writer checks the cell count against the resolution") {
    const TMModel model = toy_model();
    GridSpec spec = GridSpec::for_model(model, 0, 1, 2);
    const std::vector<GridCell> cells = grid_eval(model, spec);
    CHECK_THROWS_AS(grid_to_pgm(cells, 3), InputError);
}
