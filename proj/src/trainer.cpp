#include "tsetlin/trainer.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tsetlin/errors.hpp"

namespace tsetlin {

namespace {

void check_dataset(const Dataset& data, int features) {
    if (data.samples.empty()) throw InputError("training set is empty");
    if (data.samples.size() != data.labels.size())
        throw InputError("sample and label counts differ");
    for (const BitVector& x : data.samples)
        if (static_cast<int>(x.size()) != features)
            throw InputError("sample width does not match the machine's feature count");
}

struct ClauseStats {
    double len_pos = 0.0;
    double len_neg = 0.0;
    double weight = 0.0;
};

ClauseStats clause_stats(const Machine& m) {
    const ClauseBank bank = m.bank();
    double len[2] = {0.0, 0.0};
    double w_sum = 0.0;
    for (int i = 0; i < bank.clauses; ++i) {
        const auto row = bank.include_row(i);
        double len_i = 0.0;
        for (std::uint8_t inc : row) len_i += inc;
        len[i % 2] += len_i;
        w_sum += bank.weights[i];
    }
    const double half = bank.clauses / 2.0;
    return {len[0] / half, len[1] / half, w_sum / bank.clauses};
}

// One pass in shuffled order over samples relabeled to binary targets.
void run_epoch(Machine& m, const std::vector<BitVector>& samples,
               const std::vector<std::uint8_t>& targets, const TMConfig& cfg,
               std::vector<std::size_t>& order, RandomSource& rng) {
    shuffle(order, rng);
    for (std::size_t idx : order) fit_sample(m, samples[idx], targets[idx] != 0, cfg, rng);
}

double binary_accuracy(const Machine& m, const std::vector<BitVector>& samples,
                       const std::vector<std::uint8_t>& targets, bool tie_to_zero) {
    const ClauseBank bank = m.bank();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Prediction p = predict({&bank, 1}, samples[i], tie_to_zero);
        hits += p.label == (targets[i] != 0 ? 1 : 0);
    }
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

void record_epoch(TrainHistory& h, const Machine& m, const std::vector<BitVector>& samples,
                  const std::vector<std::uint8_t>& targets, bool tie_to_zero) {
    const ClauseStats st = clause_stats(m);
    h.accuracy.push_back(binary_accuracy(m, samples, targets, tie_to_zero));
    h.mean_clause_len_pos.push_back(st.len_pos);
    h.mean_clause_len_neg.push_back(st.len_neg);
    h.mean_weight.push_back(st.weight);
}

std::vector<std::uint8_t> targets_for_class(const std::vector<int>& labels, int cls) {
    std::vector<std::uint8_t> t(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) t[i] = labels[i] == cls;
    return t;
}

}  // namespace

Machine make_machine(const TMConfig& cfg, int features, RandomSource& rng) {
    cfg.validate();
    if (features <= 0) throw InputError("machine needs at least one feature");
    Machine m;
    m.states = init_states(cfg.n_clauses, features, cfg.states_per_action, rng);
    m.weights.assign(static_cast<std::size_t>(cfg.n_clauses), cfg.initial_weight);
    m.t_margin = cfg.t_margin;
    return m;
}

std::int32_t update_weight(std::int32_t w, WeightEvent event) {
    switch (event) {
        case WeightEvent::TruePositive: return w + 1;
        case WeightEvent::FalsePositive: return w > 0 ? w - 1 : w;
        case WeightEvent::NoFire: return w;
    }
    return w;  // unreachable
}

int update_threshold(int t, bool correct) {
    if (correct) return t > 1 ? t - 1 : 1;
    return t + 1;
}

void fit_sample(Machine& m, const BitVector& x, bool y, const TMConfig& cfg, RandomSource& rng,
                StepTrace* trace) {
    const BitVector lit = literals(x);

    // The effective margin is the machine's own (possibly annealed) T.
    TMConfig step_cfg = cfg;
    step_cfg.t_margin = m.t_margin;

    const ClauseBank bank = m.bank();
    FeedbackDecision dec = decide_feedback(bank, m.states, lit, y, step_cfg, rng);

    if (trace) {
        trace->vote = dec.vote;
        trace->probability = dec.probability;
        trace->selected = dec.selected;
        trace->clause_out = dec.clause_out;
        trace->events.assign(static_cast<std::size_t>(bank.clauses), WeightEvent::NoFire);
        trace->weight_delta.assign(static_cast<std::size_t>(bank.clauses), 0);
    }

    for (int i = 0; i < bank.clauses; ++i) {
        WeightEvent event = WeightEvent::NoFire;
        if (dec.selected[i] && dec.clause_out[i]) {
            const bool concordant = (bank.polarity(i) > 0) == y;
            event = concordant ? WeightEvent::TruePositive : WeightEvent::FalsePositive;
        }
        const std::int32_t updated = update_weight(m.weights[i], event);
        if (trace) {
            trace->events[i] = event;
            trace->weight_delta[i] = updated - m.weights[i];
        }
        m.weights[i] = updated;
    }

    m.states = apply_feedback(m.states, dec.moves);

    if (cfg.learnable_t) {
        const std::int64_t cut = cfg.tie_to_zero ? 1 : 0;
        const bool predicted = dec.vote >= cut;
        m.t_margin = update_threshold(m.t_margin, predicted == y);
    }
}

std::string TrainHistory::to_csv() const {
    std::ostringstream out;
    out << "epoch,accuracy,mean_clause_len_pos,mean_clause_len_neg,mean_weight\n";
    for (int e = 0; e < epochs(); ++e)
        out << e + 1 << ',' << accuracy[e] << ',' << mean_clause_len_pos[e] << ','
            << mean_clause_len_neg[e] << ',' << mean_weight[e] << '\n';
    return out.str();
}

TrainHistory fit(Machine& m, const Dataset& data, const TMConfig& cfg, RandomSource& rng,
                 const EpochMonitor& monitor) {
    cfg.validate();
    check_dataset(data, m.features());
    for (int label : data.labels)
        if (label != 0 && label != 1)
            throw InputError("fit expects binary labels; use fit_one_vs_rest for multiclass");

    std::vector<std::uint8_t> targets(data.labels.begin(), data.labels.end());
    std::vector<std::size_t> order(data.samples.size());
    std::iota(order.begin(), order.end(), 0);

    TrainHistory history;
    for (int e = 0; e < cfg.epochs; ++e) {
        run_epoch(m, data.samples, targets, cfg, order, rng);
        record_epoch(history, m, data.samples, targets, cfg.tie_to_zero);
        if (monitor && monitor(e, {&m, 1})) break;
    }
    return history;
}

std::pair<Machine, TrainHistory> train_binary(const Dataset& data, const TMConfig& cfg,
                                              const EpochMonitor& monitor) {
    cfg.validate();
    if (data.samples.empty()) throw InputError("training set is empty");
    Rng rng(cfg.seed);
    Machine m = make_machine(cfg, static_cast<int>(data.samples.front().size()), rng);
    TrainHistory history = fit(m, data, cfg, rng, monitor);
    return {std::move(m), std::move(history)};
}

OneVsRestResult fit_one_vs_rest(const Dataset& data, const TMConfig& cfg,
                                const EpochMonitor& monitor) {
    cfg.validate();
    if (data.n_classes < 2) throw InputError("one-vs-rest needs at least two classes");
    if (data.samples.empty()) throw InputError("training set is empty");
    const int features = static_cast<int>(data.samples.front().size());
    check_dataset(data, features);

    // Per-class streams and shuffle orders evolve independently, so running
    // the classes in lockstep produces bit-identical machines to training
    // them one after another.
    OneVsRestResult result;
    std::vector<Rng> rngs;
    std::vector<std::vector<std::uint8_t>> targets;
    std::vector<std::vector<std::size_t>> orders;
    rngs.reserve(static_cast<std::size_t>(data.n_classes));
    for (int c = 0; c < data.n_classes; ++c) {
        rngs.emplace_back(derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(c)));
        result.machines.push_back(make_machine(cfg, features, rngs.back()));
        targets.push_back(targets_for_class(data.labels, c));
        orders.emplace_back(data.samples.size());
        std::iota(orders.back().begin(), orders.back().end(), 0);
    }
    result.histories.resize(result.machines.size());

    for (int e = 0; e < cfg.epochs; ++e) {
        for (int c = 0; c < data.n_classes; ++c) {
            run_epoch(result.machines[c], data.samples, targets[c], cfg, orders[c], rngs[c]);
            record_epoch(result.histories[c], result.machines[c], data.samples, targets[c],
                         cfg.tie_to_zero);
        }
        if (monitor && monitor(e, {result.machines.data(), result.machines.size()})) break;
    }
    return result;
}

double accuracy(std::span<const ClauseBank> banks, const Dataset& data, bool tie_to_zero) {
    if (data.samples.empty()) throw InputError("accuracy: empty dataset");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < data.samples.size(); ++i) {
        const Prediction p = predict(banks, data.samples[i], tie_to_zero);
        hits += p.label == data.labels[i];
    }
    return static_cast<double>(hits) / static_cast<double>(data.samples.size());
}

}  // namespace tsetlin
