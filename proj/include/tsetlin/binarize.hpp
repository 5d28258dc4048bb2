#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsetlin/model.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

// Thermometer encoder. Each raw feature gets an ascending threshold list;
// bit j of its code reads "value is strictly above threshold j", so codes
// are always of the form 1...10...0.
struct Binarizer {
    std::vector<std::vector<double>> thresholds;  // one list per raw feature

    int raw_features() const { return static_cast<int>(thresholds.size()); }
    int output_bits() const;

    // Encodes one raw row. Throws InputError on a width mismatch.
    BitVector encode(const std::vector<double>& x) const;
};

// Thresholds at the j/(k+1) quantiles of each training column, j = 1..k,
// with linear interpolation between order statistics. Duplicate quantiles
// collapse to one threshold; a constant column ends up with none at all and
// leaves a note in `warnings` (it can never produce a bit); a column that
// only takes the values 0 and 1 passes through as a single bit cut at 0.5.
Binarizer fit_thresholds(const std::vector<std::vector<double>>& rows, int bits_per_feature,
                         std::vector<std::string>* warnings = nullptr);

// Numeric table with string class labels mapped to dense ids.
struct RawData {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::vector<std::string> class_names;    // sorted; index = class id
    std::vector<std::string> feature_names;  // header names of the feature columns
};

// Loads a headered CSV. `label_column` names the target column; empty means
// the last column. Labels may be arbitrary strings (sorted unique values
// become class ids 0..K-1); every other column must parse as a number.
// Throws InputError on unreadable files or malformed content.
RawData load_csv(const std::string& path, const std::string& label_column = "");

// Same parse from an in-memory string (testing convenience).
RawData parse_csv(const std::string& text, const std::string& label_column = "",
                  const std::string& origin = "<memory>");

// Feature rows pulled from a headered CSV by column name, for prediction on
// data that may or may not carry a label column. Columns not named in
// `feature_names` are ignored; a missing feature column is an InputError.
std::vector<std::vector<double>> load_feature_rows(const std::string& path,
                                                   const std::vector<std::string>& feature_names);

// Binarizes every row. Bit columns get names "<feature>><threshold>".
Dataset encode_all(const RawData& raw, const Binarizer& bin);

// Deterministic stratified split: for each class, floor(fraction * count)
// samples go to the test side, drawn after a seeded shuffle of that class's
// indices. Returns (train_indices, test_indices), each sorted ascending.
std::pair<std::vector<int>, std::vector<int>> stratified_split(const std::vector<int>& labels,
                                                               double test_fraction,
                                                               std::uint64_t seed);

// Row/label subset helper for the splits above.
RawData take_rows(const RawData& raw, const std::vector<int>& indices);

}  // namespace tsetlin
