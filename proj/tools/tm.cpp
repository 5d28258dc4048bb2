// tm: train, inspect and apply weighted Tsetlin machine models from the
// command line. Prints machine-readable output on stdout and progress on
// stderr; TM_LOG=quiet|info|debug controls how chatty stderr gets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsetlin/binarize.hpp"
#include "tsetlin/boundary.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/interpret.hpp"
#include "tsetlin/model_store.hpp"
#include "tsetlin/pipeline.hpp"

namespace {

using nlohmann::json;
using namespace tsetlin;

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
    const char* v = std::getenv("TM_LOG");
    if (!v) return LogLevel::Info;
    const std::string s(v);
    if (s == "quiet") return LogLevel::Quiet;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Info;
}

void info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << msg << '\n';
}

void debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << msg << '\n';
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw InputError("failed writing '" + path + "'");
}

// Options shared by the training-style commands.
struct CommonOpts {
    std::string data_path;
    std::string model_path;
    TrainOptions train;
    int total_states = 200;  // both actions together; must be even
};

void add_train_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--data", o.data_path, "training CSV (headered; label column last)")
        ->required();
    cmd->add_option("--model", o.model_path, "where to write the model JSON");
    cmd->add_option("--seed", o.train.config.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--clauses", o.train.config.n_clauses, "clause count (even)")
        ->capture_default_str();
    cmd->add_option("--T", o.train.config.t_margin, "voting target margin")
        ->capture_default_str();
    cmd->add_option("--s", o.train.config.s, "specificity (>= 1)")->capture_default_str();
    cmd->add_option("--states", o.total_states, "total automaton states (even, 2N)")
        ->capture_default_str();
    cmd->add_option("--epochs", o.train.config.epochs, "training epochs")
        ->capture_default_str();
    cmd->add_flag("--boost", o.train.config.boost_true_positive,
                  "true-positive feedback with certainty");
    cmd->add_flag("--learnable-T", o.train.config.learnable_t,
                  "anneal T with prediction correctness");
    cmd->add_option("--bits", o.train.bits_per_feature, "thermometer bits per feature")
        ->capture_default_str();
    cmd->add_option("--test-fraction", o.train.test_fraction,
                    "held-out fraction per class (stratified)")
        ->capture_default_str();
    cmd->add_option("--label", o.train.label_column, "label column name (default: last)");
}

void apply_states_flag(CommonOpts& o) {
    if (o.total_states < 2 || o.total_states % 2 != 0)
        throw InputError("state count must be >= 2 and even, got " +
                         std::to_string(o.total_states));
    o.train.config.states_per_action = o.total_states / 2;
}

std::string accuracy_line(const TrainReport& r) {
    std::ostringstream out;
    out << "train accuracy " << r.train_accuracy << " over " << r.train_size << " rows";
    if (r.has_test) out << ", test accuracy " << r.test_accuracy << " over " << r.test_size
                        << " rows";
    return out.str();
}

int cmd_train(CommonOpts& o, const std::string& history_path) {
    apply_states_flag(o);
    const RawData raw = load_csv(o.data_path, o.train.label_column);

    const EpochMonitor monitor = [](int epoch, std::span<const Machine> machines) {
        std::ostringstream out;
        out << "epoch " << epoch + 1 << " done";
        if (!machines.empty()) out << ", T=" << machines.front().t_margin;
        debug(out.str());
        return false;
    };
    const TrainReport report = train_model(raw, o.train, monitor);
    for (const std::string& w : report.warnings) info("warning: " + w);
    info(accuracy_line(report));

    if (!o.model_path.empty()) {
        save_model(report.model, o.model_path);
        info("model written to " + o.model_path);

        const std::string base = history_path.empty() ? o.model_path : history_path;
        for (std::size_t c = 0; c < report.histories.size(); ++c) {
            std::string path = base;
            if (report.histories.size() > 1)
                path += ".history." + report.model.class_names[c] + ".csv";
            else
                path += ".history.csv";
            if (!history_path.empty() && report.histories.size() == 1) path = history_path;
            write_file(path, report.histories[c].to_csv());
            debug("history written to " + path);
        }
    }
    std::cout << accuracy_line(report) << '\n';
    return 0;
}

int cmd_eval(const std::string& data_path, const std::string& model_path,
             const std::string& label_column) {
    const TMModel model = load_model(model_path);
    const RawData raw = load_csv(data_path, label_column);
    if (raw.class_names != model.class_names)
        info("note: evaluation class set differs from the training one");

    const double acc = evaluate(model, raw);
    const auto counts = confusion(model, raw);
    std::cout << "accuracy " << acc << " over " << raw.rows.size() << " rows\n";
    std::cout << "confusion (rows: actual, columns: predicted)\n";
    for (std::size_t a = 0; a < counts.size(); ++a) {
        std::cout << model.class_names.at(a) << ':';
        for (int n : counts[a]) std::cout << ' ' << n;
        std::cout << '\n';
    }
    return 0;
}

int cmd_predict(const std::string& data_path, const std::string& model_path) {
    const TMModel model = load_model(model_path);
    const auto rows = load_feature_rows(data_path, model.feature_names);

    std::cout << "row,predicted";
    if (model.binary()) {
        std::cout << ",vote\n";
    } else {
        for (const std::string& c : model.class_names) std::cout << ",vote_" << c;
        std::cout << '\n';
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Prediction p = model.predict_raw(rows[i]);
        std::cout << i << ',' << model.class_names.at(static_cast<std::size_t>(p.label));
        for (std::int64_t v : p.votes) std::cout << ',' << v;
        std::cout << '\n';
    }
    return 0;
}

int cmd_rules(const std::string& model_path, int top_k, bool as_json) {
    const TMModel model = load_model(model_path);

    json doc;
    doc["classes"] = json::array();
    std::ostringstream text;
    for (std::size_t c = 0; c < model.machines.size(); ++c) {
        const Machine& m = model.machines[c];
        const std::string name =
            model.binary() ? model.class_names.at(1) : model.class_names.at(c);

        std::vector<int> picked;
        const DnfExpression dnf = class_dnf(m, top_k, &picked);
        const ClauseBank bank = m.bank();

        json cls;
        cls["class"] = name;
        cls["dnf"] = to_signed_ids(dnf);
        cls["text"] = render(dnf, model.bit_names);
        cls["clauses"] = json::array();

        text << "class " << name << ":\n";
        text << "  " << render(dnf, model.bit_names) << '\n';
        for (int idx : picked) {
            const auto term = extract_term(bank.include_row(idx), bank.features);
            const std::string t = render(*term, bank.features, model.bit_names);
            text << "  clause " << idx << " (weight " << bank.weights[idx] << "): " << t
                 << '\n';
            cls["clauses"].push_back({{"index", idx},
                                      {"weight", bank.weights[idx]},
                                      {"term", to_signed_ids({bank.features, {*term}})[0]}});
        }
        doc["classes"].push_back(cls);
    }
    if (as_json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text.str();
    return 0;
}

int cmd_boundary(const std::string& model_path, int fx, int fy, int resolution,
                 const std::string& out_csv, const std::string& out_pgm,
                 const std::vector<double>& range) {
    const TMModel model = load_model(model_path);
    if (model.binarizer.raw_features() < 2)
        throw InputError("boundary export needs a model with at least two raw features");

    GridSpec spec = GridSpec::for_model(model, fx, fy, resolution);
    if (!range.empty()) {
        if (range.size() != 4) throw InputError("--range wants x_min x_max y_min y_max");
        spec.x_min = range[0];
        spec.x_max = range[1];
        spec.y_min = range[2];
        spec.y_max = range[3];
    }
    const std::vector<GridCell> cells = grid_eval(model, spec);
    const std::string csv = grid_to_csv(cells);
    if (out_csv.empty())
        std::cout << csv;
    else {
        write_file(out_csv, csv);
        info("grid written to " + out_csv);
    }
    if (!out_pgm.empty()) {
        write_file(out_pgm, grid_to_pgm(cells, spec.resolution));
        info("margin image written to " + out_pgm);
    }
    return 0;
}

int cmd_bench(CommonOpts& o, const std::vector<double>& s_values, int n_seeds, double target,
              int cap) {
    apply_states_flag(o);
    if (n_seeds < 1) throw InputError("bench needs at least one seed");
    const RawData raw = load_csv(o.data_path, o.train.label_column);

    BenchOptions bench;
    bench.base = o.train;
    if (!s_values.empty()) bench.s_values = s_values;
    bench.seeds.clear();
    for (int i = 0; i < n_seeds; ++i)
        bench.seeds.push_back(o.train.config.seed + static_cast<std::uint64_t>(i));
    bench.target_accuracy = target;
    bench.epoch_cap = cap;

    const std::vector<BenchRow> rows = run_bench(raw, bench);
    std::cout << "s,seed,epochs,reached,seconds,model_bytes,test_accuracy,mean_clause_len\n";
    for (const BenchRow& r : rows)
        std::cout << r.s << ',' << r.seed << ',' << r.epochs_to_target << ','
                  << (r.reached ? "yes" : "no") << ',' << r.seconds << ',' << r.model_bytes
                  << ',' << r.test_accuracy << ',' << r.mean_clause_len << '\n';

    std::cout << "\nmedians per s (epochs of runs that missed the target count as the cap)\n";
    std::cout << "s,median_epochs,median_model_bytes,median_clause_len,reached\n";
    for (double s : bench.s_values) {
        std::vector<double> epochs, bytes, lens;
        int reached = 0, total = 0;
        for (const BenchRow& r : rows) {
            if (r.s != s) continue;
            epochs.push_back(r.epochs_to_target);
            bytes.push_back(static_cast<double>(r.model_bytes));
            lens.push_back(r.mean_clause_len);
            reached += r.reached;
            ++total;
        }
        std::cout << s << ',';
        if (reached == total)
            std::cout << median(epochs);
        else
            std::cout << "not reached";
        std::cout << ',' << median(bytes) << ',' << median(lens) << ',' << reached << '/'
                  << total << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tm: interpretable weighted Tsetlin machine"};
    app.require_subcommand(1);

    CommonOpts train_opts;
    std::string history_path;
    auto* train = app.add_subcommand("train", "train a model on a CSV");
    add_train_flags(train, train_opts);
    train->add_option("--history", history_path,
                      "training telemetry CSV (default: <model>.history.csv)");

    std::string eval_data, eval_model, eval_label;
    auto* eval = app.add_subcommand("eval", "accuracy and confusion on labeled data");
    eval->add_option("--data", eval_data, "CSV to evaluate")->required();
    eval->add_option("--model", eval_model, "model JSON")->required();
    eval->add_option("--label", eval_label, "label column name (default: last)");

    std::string pred_data, pred_model;
    auto* pred = app.add_subcommand("predict", "predictions for a CSV (label optional)");
    pred->add_option("--data", pred_data, "CSV with the model's feature columns")->required();
    pred->add_option("--model", pred_model, "model JSON")->required();

    std::string rules_model;
    int top_k = 10;
    bool rules_json = false;
    auto* rules = app.add_subcommand("rules", "per-class DNF of the strongest clauses");
    rules->add_option("--model", rules_model, "model JSON")->required();
    rules->add_option("--top-k", top_k, "clauses per class")->capture_default_str();
    rules->add_flag("--json", rules_json, "structured output");

    std::string bnd_model, bnd_csv, bnd_pgm;
    int bnd_x = 0, bnd_y = 1, resolution = 128;
    std::vector<double> bnd_range;
    auto* bnd = app.add_subcommand("boundary", "decision grid over two raw features");
    bnd->add_option("--model", bnd_model, "model JSON")->required();
    bnd->add_option("--x", bnd_x, "raw feature index for the x axis")->capture_default_str();
    bnd->add_option("--y", bnd_y, "raw feature index for the y axis")->capture_default_str();
    bnd->add_option("--resolution", resolution, "grid points per axis")->capture_default_str();
    bnd->add_option("--out", bnd_csv, "grid CSV path (default: stdout)");
    bnd->add_option("--pgm", bnd_pgm, "margin image path (8-bit PGM)");
    bnd->add_option("--range", bnd_range, "x_min x_max y_min y_max (default: training ranges)")
        ->expected(4);

    CommonOpts bench_opts;
    std::vector<double> bench_s;
    int bench_seeds = 5, bench_cap = 1000;
    double bench_target = 0.95;
    auto* bench = app.add_subcommand("bench", "convergence and size across s values");
    add_train_flags(bench, bench_opts);
    bench->add_option("--s-values", bench_s, "specificities to compare (default: 2 10)");
    bench->add_option("--bench-seeds", bench_seeds, "seeds per s (seed, seed+1, ...)")
        ->capture_default_str();
    bench->add_option("--target", bench_target, "test accuracy to reach")
        ->capture_default_str();
    bench->add_option("--cap", bench_cap, "epoch cap per run")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (train->parsed()) return cmd_train(train_opts, history_path);
        if (eval->parsed()) return cmd_eval(eval_data, eval_model, eval_label);
        if (pred->parsed()) return cmd_predict(pred_data, pred_model);
        if (rules->parsed()) return cmd_rules(rules_model, top_k, rules_json);
        if (bnd->parsed())
            return cmd_boundary(bnd_model, bnd_x, bnd_y, resolution, bnd_csv, bnd_pgm,
                                bnd_range);
        if (bench->parsed())
            return cmd_bench(bench_opts, bench_s, bench_seeds, bench_target, bench_cap);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the parse diagnostics
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "model error: " << e.what() << '\n';
        return 3;
    }
}
