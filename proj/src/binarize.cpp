#include "tsetlin/binarize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "tsetlin/errors.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

namespace {

// Linearly interpolated quantile of a sorted sample (the convention numpy
// and R's default share): h = (n-1)q, blend the two straddling values.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * q;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::string format_number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& cell, const std::string& origin, std::size_t row,
                    const std::string& column) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        if (!std::isfinite(v)) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw InputError(origin + ": row " + std::to_string(row) + ", column '" + column +
                         "': cannot parse '" + cell + "' as a number");
    }
}

}  // namespace

int Binarizer::output_bits() const {
    int bits = 0;
    for (const auto& t : thresholds) bits += static_cast<int>(t.size());
    return bits;
}

BitVector Binarizer::encode(const std::vector<double>& x) const {
    if (x.size() != thresholds.size())
        throw InputError("encode: expected " + std::to_string(thresholds.size()) +
                         " features, got " + std::to_string(x.size()));
    BitVector bits;
    bits.reserve(static_cast<std::size_t>(output_bits()));
    for (std::size_t f = 0; f < x.size(); ++f)
        for (double thr : thresholds[f]) bits.push_back(x[f] > thr ? 1 : 0);
    return bits;
}

Binarizer fit_thresholds(const std::vector<std::vector<double>>& rows, int bits_per_feature,
                         std::vector<std::string>* warnings) {
    if (rows.empty()) throw InputError("fit_thresholds: no rows");
    if (bits_per_feature < 1) throw InputError("fit_thresholds: bits per feature must be >= 1");
    const std::size_t n_features = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n_features) throw InputError("fit_thresholds: ragged rows");

    Binarizer bin;
    bin.thresholds.resize(n_features);
    std::vector<double> column(rows.size());
    for (std::size_t f = 0; f < n_features; ++f) {
        for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][f];
        std::sort(column.begin(), column.end());

        std::vector<double>& out = bin.thresholds[f];
        if (column.front() == column.back()) {
            // Constant column: no threshold can ever separate anything.
            if (warnings)
                warnings->push_back("feature " + std::to_string(f) +
                                    " is constant in the training data; it contributes no bits");
            continue;
        }
        const bool binary01 = std::all_of(column.begin(), column.end(),
                                          [](double v) { return v == 0.0 || v == 1.0; });
        if (binary01) {
            // Already a bit; a single midpoint cut passes it through
            // unchanged instead of wasting k identical thermometer bits.
            out.push_back(0.5);
            continue;
        }
        for (int j = 1; j <= bits_per_feature; ++j) {
            const double q = static_cast<double>(j) / static_cast<double>(bits_per_feature + 1);
            const double thr = quantile_sorted(column, q);
            // Equal quantiles would make identical bits; keep the list
            // strictly increasing instead.
            if (out.empty() || thr > out.back()) out.push_back(thr);
        }
    }
    return bin;
}

RawData parse_csv(const std::string& text, const std::string& label_column,
                  const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError(origin + ": empty file");

    std::vector<std::string> header = split_csv_line(line);
    for (auto& h : header) h = trim(h);
    if (header.size() < 2)
        throw InputError(origin + ": need at least one feature column and a label column");

    std::size_t label_idx = header.size() - 1;
    if (!label_column.empty()) {
        const auto it = std::find(header.begin(), header.end(), label_column);
        if (it == header.end())
            throw InputError(origin + ": no column named '" + label_column + "'");
        label_idx = static_cast<std::size_t>(it - header.begin());
    }

    RawData raw;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (c != label_idx) raw.feature_names.push_back(header[c]);

    std::vector<std::string> label_strings;
    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw InputError(origin + ": row " + std::to_string(row_no) + " has " +
                             std::to_string(cells.size()) + " cells, header has " +
                             std::to_string(header.size()));
        std::vector<double> values;
        values.reserve(header.size() - 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::string cell = trim(cells[c]);
            if (c == label_idx) {
                label_strings.push_back(cell);
            } else {
                values.push_back(parse_double(cell, origin, row_no, header[c]));
            }
        }
        raw.rows.push_back(std::move(values));
    }
    if (raw.rows.empty()) throw InputError(origin + ": no data rows");

    // Class ids follow sorted label order: numeric when every label parses
    // as a number, lexicographic otherwise.
    std::vector<std::string> unique = label_strings;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    bool all_numeric = true;
    std::vector<double> numeric(unique.size());
    for (std::size_t i = 0; i < unique.size() && all_numeric; ++i) {
        try {
            std::size_t used = 0;
            numeric[i] = std::stod(unique[i], &used);
            all_numeric = used == unique[i].size();
        } catch (const std::exception&) {
            all_numeric = false;
        }
    }
    if (all_numeric) {
        std::vector<std::size_t> idx(unique.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
        std::vector<std::string> reordered;
        reordered.reserve(unique.size());
        for (std::size_t i : idx) reordered.push_back(unique[i]);
        unique = std::move(reordered);
    }
    raw.class_names = unique;

    std::map<std::string, int> id_of;
    for (std::size_t i = 0; i < unique.size(); ++i) id_of[unique[i]] = static_cast<int>(i);
    raw.labels.reserve(label_strings.size());
    for (const auto& s : label_strings) raw.labels.push_back(id_of.at(s));
    return raw;
}

RawData load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), label_column, path);
}

std::vector<std::vector<double>> load_feature_rows(
    const std::string& path, const std::vector<std::string>& feature_names) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line)) throw InputError(path + ": empty file");

    std::vector<std::string> header = split_csv_line(line);
    for (auto& h : header) h = trim(h);
    std::vector<std::size_t> pick;
    pick.reserve(feature_names.size());
    for (const std::string& name : feature_names) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw InputError(path + ": missing feature column '" + name + "'");
        pick.push_back(static_cast<std::size_t>(it - header.begin()));
    }

    std::vector<std::vector<double>> rows;
    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw InputError(path + ": row " + std::to_string(row_no) + " has " +
                             std::to_string(cells.size()) + " cells, header has " +
                             std::to_string(header.size()));
        std::vector<double> values;
        values.reserve(pick.size());
        for (std::size_t c = 0; c < pick.size(); ++c)
            values.push_back(parse_double(trim(cells[pick[c]]), path, row_no,
                                          feature_names[c]));
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw InputError(path + ": no data rows");
    return rows;
}

Dataset encode_all(const RawData& raw, const Binarizer& bin) {
    Dataset data;
    data.samples.reserve(raw.rows.size());
    for (const auto& row : raw.rows) data.samples.push_back(bin.encode(row));
    data.labels = raw.labels;
    data.n_classes = static_cast<int>(raw.class_names.size());
    data.class_names = raw.class_names;
    for (std::size_t f = 0; f < bin.thresholds.size(); ++f) {
        const std::string base =
            f < raw.feature_names.size() ? raw.feature_names[f] : "f" + std::to_string(f);
        for (double thr : bin.thresholds[f])
            data.feature_names.push_back(base + ">" + format_number(thr));
    }
    return data;
}

std::pair<std::vector<int>, std::vector<int>> stratified_split(const std::vector<int>& labels,
                                                               double test_fraction,
                                                               std::uint64_t seed) {
    if (labels.empty()) throw InputError("stratified_split: no labels");
    if (test_fraction < 0.0 || test_fraction >= 1.0)
        throw InputError("stratified_split: test fraction must be in [0, 1)");

    std::map<int, std::vector<int>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i)
        by_class[labels[i]].push_back(static_cast<int>(i));

    Rng rng(seed);
    std::vector<int> train, test;
    for (auto& [cls, indices] : by_class) {
        shuffle(indices, rng);
        const auto n_test = static_cast<std::size_t>(
            std::floor(test_fraction * static_cast<double>(indices.size())));
        for (std::size_t i = 0; i < indices.size(); ++i)
            (i < n_test ? test : train).push_back(indices[i]);
    }
    std::sort(train.begin(), train.end());
    std::sort(test.begin(), test.end());
    return {std::move(train), std::move(test)};
}

RawData take_rows(const RawData& raw, const std::vector<int>& indices) {
    RawData out;
    out.class_names = raw.class_names;
    out.feature_names = raw.feature_names;
    out.rows.reserve(indices.size());
    out.labels.reserve(indices.size());
    for (int i : indices) {
        out.rows.push_back(raw.rows.at(static_cast<std::size_t>(i)));
        out.labels.push_back(raw.labels.at(static_cast<std::size_t>(i)));
    }
    return out;
}

}  // namespace tsetlin
