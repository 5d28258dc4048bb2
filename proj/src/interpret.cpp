#include "tsetlin/interpret.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "tsetlin/errors.hpp"

namespace tsetlin {

namespace {

int feature_of(int id, int arity) { return id < arity ? id : id - arity; }
bool negated(int id, int arity) { return id >= arity; }

// Presentation order: by feature index, a positive literal before the
// negation of the same feature.
std::vector<int> presentation_order(const Term& t, int arity) {
    std::vector<int> ids = t.ids;
    std::sort(ids.begin(), ids.end(), [arity](int a, int b) {
        const int fa = feature_of(a, arity), fb = feature_of(b, arity);
        if (fa != fb) return fa < fb;
        return a < b;
    });
    return ids;
}

bool term_consistent(const Term& t, int arity) {
    for (int id : t.ids) {
        const int comp = complement_literal(id, arity);
        if (std::binary_search(t.ids.begin(), t.ids.end(), comp)) return false;
    }
    return true;
}

// t subsumes u when every literal of t appears in u (t is the weaker, more
// general conjunction).
bool subsumes(const Term& t, const Term& u) {
    return std::includes(u.ids.begin(), u.ids.end(), t.ids.begin(), t.ids.end());
}

bool term_fires(const Term& t, const BitVector& x, int arity) {
    for (int id : t.ids) {
        const bool bit = x[static_cast<std::size_t>(feature_of(id, arity))] != 0;
        if (bit == negated(id, arity)) return false;
    }
    return true;
}

}  // namespace

std::optional<Term> extract_term(std::span<const std::uint8_t> include_row, int features) {
    if (include_row.size() != static_cast<std::size_t>(2 * features))
        throw std::invalid_argument("extract_term: row width is not 2 * features");
    Term t;
    for (int k = 0; k < 2 * features; ++k)
        if (include_row[k]) t.ids.push_back(k);
    if (!term_consistent(t, features)) return std::nullopt;
    return t;
}

DnfExpression class_dnf(const Machine& m, int top_k, std::vector<int>* picked) {
    if (top_k < 1) throw InputError("class_dnf: top_k must be >= 1");
    const ClauseBank bank = m.bank();

    struct Candidate {
        int index;
        std::int32_t weight;
        Term term;
    };
    std::vector<Candidate> candidates;
    for (int i = 0; i < bank.clauses; ++i) {
        if (bank.polarity(i) < 0 || bank.weights[i] <= 0) continue;
        auto term = extract_term(bank.include_row(i), bank.features);
        if (!term || term->is_true()) continue;  // cannot fire at inference
        candidates.push_back({i, bank.weights[i], std::move(*term)});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.index < b.index;
    });
    if (candidates.size() > static_cast<std::size_t>(top_k)) candidates.resize(top_k);

    DnfExpression e;
    e.arity = bank.features;
    e.terms.reserve(candidates.size());
    if (picked) picked->clear();
    for (auto& c : candidates) {
        e.terms.push_back(std::move(c.term));
        if (picked) picked->push_back(c.index);
    }
    return simplify(std::move(e));
}

DnfExpression simplify(DnfExpression e) {
    // Every rewrite below preserves the truth table. Each one strictly
    // shrinks the total literal or term count, so the fixpoint loop ends.
    bool changed = true;
    while (changed) {
        changed = false;

        // Inconsistent terms never fire.
        const auto inconsistent = [&](const Term& t) { return !term_consistent(t, e.arity); };
        const auto tail = std::remove_if(e.terms.begin(), e.terms.end(), inconsistent);
        if (tail != e.terms.end()) {
            e.terms.erase(tail, e.terms.end());
            changed = true;
        }

        // Duplicates and absorbed supersets, in one keep scan. A term goes
        // when an equal term appears earlier, or any other surviving term
        // subsumes it with strictly fewer literals.
        std::vector<char> keep(e.terms.size(), 1);
        for (std::size_t j = 0; j < e.terms.size(); ++j) {
            for (std::size_t i = 0; i < e.terms.size() && keep[j]; ++i) {
                if (i == j || !keep[i]) continue;
                const bool duplicate = e.terms[i] == e.terms[j] && i < j;
                const bool absorbed = e.terms[i].ids.size() < e.terms[j].ids.size() &&
                                      subsumes(e.terms[i], e.terms[j]);
                if (duplicate || absorbed) keep[j] = 0;
            }
        }
        for (std::size_t j = e.terms.size(); j-- > 0;) {
            if (keep[j]) continue;
            e.terms.erase(e.terms.begin() + static_cast<std::ptrdiff_t>(j));
            changed = true;
        }

        // Unit resolution: with {a} present, "not a" contributes nothing to
        // any other term ({a} already covers every input where "not a"
        // would have held).
        for (std::size_t u = 0; u < e.terms.size(); ++u) {
            if (e.terms[u].ids.size() != 1) continue;
            const int comp = complement_literal(e.terms[u].ids.front(), e.arity);
            for (std::size_t j = 0; j < e.terms.size(); ++j) {
                if (j == u) continue;
                Term& t = e.terms[j];
                const auto pos = std::find(t.ids.begin(), t.ids.end(), comp);
                if (pos != t.ids.end()) {
                    t.ids.erase(pos);
                    changed = true;
                }
            }
        }
    }
    return e;
}

bool eval_dnf(const DnfExpression& e, const BitVector& x) {
    if (static_cast<int>(x.size()) != e.arity)
        throw std::invalid_argument("eval_dnf: input width does not match arity");
    for (const Term& t : e.terms)
        if (term_fires(t, x, e.arity)) return true;
    return false;
}

bool equivalent(const DnfExpression& a, const DnfExpression& b) {
    if (a.arity != b.arity) return false;
    if (a.arity > 20)
        throw std::invalid_argument("equivalent: arity above 20 bits is not enumerable");
    const std::uint32_t limit = 1u << a.arity;
    BitVector x(static_cast<std::size_t>(a.arity));
    for (std::uint32_t m = 0; m < limit; ++m) {
        for (int k = 0; k < a.arity; ++k) x[static_cast<std::size_t>(k)] = (m >> k) & 1u;
        if (eval_dnf(a, x) != eval_dnf(b, x)) return false;
    }
    return true;
}

ClauseLengthStats clause_length_stats(const Machine& m) {
    const ClauseBank bank = m.bank();
    ClauseLengthStats st;
    double sum[2] = {0.0, 0.0};
    int max[2] = {0, 0};
    for (int i = 0; i < bank.clauses; ++i) {
        int len = 0;
        for (std::uint8_t inc : bank.include_row(i)) len += inc;
        sum[i % 2] += len;
        max[i % 2] = std::max(max[i % 2], len);
    }
    const double half = bank.clauses / 2.0;
    st.mean_pos = sum[0] / half;
    st.mean_neg = sum[1] / half;
    st.mean_all = (sum[0] + sum[1]) / bank.clauses;
    st.max_pos = max[0];
    st.max_neg = max[1];
    return st;
}

std::string render(const Term& t, int arity, std::span<const std::string> names) {
    if (!names.empty() && static_cast<int>(names.size()) != arity)
        throw std::invalid_argument("render: need one name per input bit");
    if (t.is_true()) return "⊤";
    std::ostringstream out;
    bool first = true;
    for (int id : presentation_order(t, arity)) {
        if (!first) out << " ∧ ";
        first = false;
        if (negated(id, arity)) out << "¬";
        const int f = feature_of(id, arity);
        if (names.empty()) {
            out << "x" << f;
        } else {
            out << names[static_cast<std::size_t>(f)];
        }
    }
    return out.str();
}

std::string render(const DnfExpression& e, std::span<const std::string> names) {
    if (e.terms.empty()) return "⊥";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : e.terms) {
        if (!first) out << " ∨ ";
        first = false;
        out << render(t, e.arity, names);
    }
    return out.str();
}

DnfExpression parse_dnf(const std::string& text, int arity) {
    if (arity < 1) throw InputError("parse_dnf: arity must be >= 1");
    DnfExpression e;
    e.arity = arity;

    auto strip = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(" \t");
        return s.substr(a, b - a + 1);
    };
    // Normalize the connectives to single ASCII bytes, then split.
    std::string norm;
    for (std::size_t i = 0; i < text.size();) {
        if (text.compare(i, 3, "∧") == 0) {  // ∧
            norm += '&';
            i += 3;
        } else if (text.compare(i, 3, "∨") == 0) {  // ∨
            norm += '|';
            i += 3;
        } else if (text.compare(i, 2, "¬") == 0) {  // ¬
            norm += '!';
            i += 2;
        } else {
            norm += text[i];
            ++i;
        }
    }

    const std::string stripped = strip(norm);
    if (stripped == "⊥") return e;  // ⊥: no terms
    if (stripped == "⊤") {          // ⊤: one empty term
        e.terms.emplace_back();
        return e;
    }
    if (stripped.empty() || stripped.back() == '&' || stripped.back() == '|')
        throw InputError("parse_dnf: expression ends on a connective");

    std::istringstream terms_in(norm);
    std::string term_text;
    while (std::getline(terms_in, term_text, '|')) {
        Term t;
        std::istringstream lits_in(term_text);
        std::string lit_text;
        while (std::getline(lits_in, lit_text, '&')) {
            std::string lit = strip(lit_text);
            if (lit == "⊤") continue;  // ⊤ inside a conjunction is a no-op
            bool neg = false;
            while (!lit.empty() && (lit.front() == '!' || lit.front() == '~')) {
                neg = !neg;
                lit = strip(lit.substr(1));
            }
            if (lit.size() < 2 || lit.front() != 'x')
                throw InputError("parse_dnf: bad literal '" + strip(lit_text) + "'");
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(lit.substr(1), &used);
                if (used != lit.size() - 1) throw std::invalid_argument(lit);
            } catch (const std::exception&) {
                throw InputError("parse_dnf: bad literal '" + strip(lit_text) + "'");
            }
            if (k < 0 || k >= arity)
                throw InputError("parse_dnf: bit index " + std::to_string(k) +
                                 " outside arity " + std::to_string(arity));
            t.ids.push_back(neg ? k + arity : k);
        }
        std::sort(t.ids.begin(), t.ids.end());
        t.ids.erase(std::unique(t.ids.begin(), t.ids.end()), t.ids.end());
        e.terms.push_back(std::move(t));
    }
    return e;
}

std::vector<std::vector<int>> to_signed_ids(const DnfExpression& e) {
    std::vector<std::vector<int>> out;
    out.reserve(e.terms.size());
    for (const Term& t : e.terms) {
        std::vector<int> ids;
        ids.reserve(t.ids.size());
        for (int id : presentation_order(t, e.arity)) {
            const int f = feature_of(id, e.arity) + 1;
            ids.push_back(negated(id, e.arity) ? -f : f);
        }
        out.push_back(std::move(ids));
    }
    return out;
}

DnfExpression from_signed_ids(const std::vector<std::vector<int>>& terms, int arity) {
    if (arity < 1) throw InputError("from_signed_ids: arity must be >= 1");
    DnfExpression e;
    e.arity = arity;
    for (const auto& ids : terms) {
        Term t;
        for (int s : ids) {
            if (s == 0 || std::abs(s) > arity)
                throw InputError("from_signed_ids: id " + std::to_string(s) +
                                 " outside arity " + std::to_string(arity));
            const int f = std::abs(s) - 1;
            t.ids.push_back(s > 0 ? f : f + arity);
        }
        std::sort(t.ids.begin(), t.ids.end());
        t.ids.erase(std::unique(t.ids.begin(), t.ids.end()), t.ids.end());
        e.terms.push_back(std::move(t));
    }
    return e;
}

}  // namespace tsetlin
