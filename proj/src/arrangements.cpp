#include "sigcheck/arrangements.h"

#include "sigcheck/errors.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace sigcheck {

namespace {

// Sums closer than this are treated as ties (kept: the earlier, lexicographically
// smaller witness).
constexpr double kTieTolerance = 1e-12;

double widen(double b, const Tolerance& tol) { return tol.paranoid ? b - kParanoidWidening : b; }

double bound(const PointClass& a, const PointClass& b, const Params& params, const Tolerance& tol) {
    return widen(pair_angle_bound(a.weight, a.annulus, b.weight, b.annulus, params), tol);
}

std::vector<std::string> labels_from_word(const std::string& word, const std::string& one_label,
                                          const std::string& half_label) {
    std::vector<std::string> out;
    out.reserve(word.size());
    for (char c : word) out.push_back(c == '1' ? one_label : half_label);
    return out;
}

// Rotate so the sequence starts at the lexicographically least rotation.
void canonical_rotation(std::vector<std::string>& seq) {
    if (seq.empty()) return;
    std::vector<std::string> best = seq;
    std::vector<std::string> cur = seq;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    seq = std::move(best);
}

struct SearchState {
    int n = 0;
    std::vector<int> remaining;
    std::vector<std::vector<double>> pair;
    double min_pair = 0.0;
    std::vector<int> seq;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_seq;
};

void search(SearchState& s, int len, double partial) {
    if (len == s.n) {
        const double total = partial + s.pair[s.seq[len - 1]][s.seq[0]];
        if (total < s.best - kTieTolerance) {
            s.best = total;
            s.best_seq = s.seq;
        }
        return;
    }
    const int last = s.seq[len - 1];
    const int remaining_edges = s.n - len + 1;
    for (std::size_t c = 0; c < s.remaining.size(); ++c) {
        if (s.remaining[c] == 0) continue;
        const double next = partial + s.pair[last][c];
        if (next + (remaining_edges - 1) * s.min_pair >= s.best - kTieTolerance) continue;
        --s.remaining[c];
        s.seq[len] = static_cast<int>(c);
        search(s, len + 1, next);
        ++s.remaining[c];
    }
}

std::vector<PointClass> nonempty_classes(std::span<const PointClass> classes) {
    std::vector<PointClass> out;
    for (const auto& c : classes) {
        if (c.count < 0) throw DomainError("class '" + c.label + "' has negative count");
        if (c.count > 0) out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_string(Method m) {
    return m == Method::TwoClassClosedForm ? "two-class-closed-form" : "exhaustive";
}

std::vector<Composition> enumerate_compositions(int m, int h) {
    if (m < 0 || h < 0) throw DomainError("enumerate_compositions: negative point count");
    if (m + h < 2) throw DomainError("enumerate_compositions: need at least two points");
    if (h == 0) return {Composition{m, 0, 0}};
    if (m == 0) return {Composition{0, h, 0}};
    std::vector<Composition> out;
    for (int k = std::min(m, h); k >= 1; --k) out.push_back(Composition{m - k, h - k, 2 * k});
    return out;
}

std::string word_for_composition(int m, int h, const Composition& c) {
    const auto all = enumerate_compositions(m, h);
    if (std::find(all.begin(), all.end(), c) == all.end()) {
        throw DomainError("composition not realizable for the given counts");
    }
    const int k = c.n1h / 2;
    if (k == 0) return std::string(static_cast<std::size_t>(m), '1') + std::string(static_cast<std::size_t>(h), 'h');
    std::string word;
    for (int block = 0; block < k; ++block) {
        const int ones = block == 0 ? m - k + 1 : 1;
        const int halves = block == 0 ? h - k + 1 : 1;
        word.append(static_cast<std::size_t>(ones), '1');
        word.append(static_cast<std::size_t>(halves), 'h');
    }
    return word;
}

Composition count_adjacencies(const std::string& word) {
    Composition c;
    const std::size_t n = word.size();
    for (std::size_t i = 0; i < n; ++i) {
        const char a = word[i];
        const char b = word[(i + 1) % n];
        if (a == '1' && b == '1') ++c.n11;
        else if (a == 'h' && b == 'h') ++c.nhh;
        else ++c.n1h;
    }
    return c;
}

double evaluate_composition(const PointClass& ones, const PointClass& halves, const Composition& c,
                            const Params& params, const Tolerance& tol) {
    double sum = 0.0;
    if (c.n11 > 0) sum += c.n11 * bound(ones, ones, params, tol);
    if (c.nhh > 0) sum += c.nhh * bound(halves, halves, params, tol);
    if (c.n1h > 0) sum += c.n1h * bound(ones, halves, params, tol);
    return sum;
}

ArrangementCertificate min_sum_two_class(const PointClass& ones, const PointClass& halves,
                                         const Params& params, const Tolerance& tol) {
    if (ones.weight != Weight::One) throw DomainError("min_sum_two_class: first class must have weight 1");
    if (halves.weight != Weight::Half) throw DomainError("min_sum_two_class: second class must have weight 1/2");
    const int m = ones.count;
    const int h = halves.count;
    const auto comps = enumerate_compositions(m, h);

    double b11 = 0.0, bhh = 0.0, b1h = 0.0;
    if (m >= 2) b11 = bound(ones, ones, params, tol);
    if (h >= 2) bhh = bound(halves, halves, params, tol);
    if (m >= 1 && h >= 1) b1h = bound(ones, halves, params, tol);
    auto value = [&](const Composition& c) { return c.n11 * b11 + c.nhh * bhh + c.n1h * b1h; };

    // The objective is affine in the block count k, so one of the two extreme
    // compositions (first and last in `comps`) is optimal.
    const Composition& first = comps.front();
    const Composition& last = comps.back();
    const Composition best = value(last) < value(first) ? last : first;
    const double min_sum = value(best);
    for (const auto& c : comps) {
        if (value(c) < min_sum - 1e-9) {
            throw std::logic_error("min_sum_two_class: interior composition below both extremes");
        }
    }

    ArrangementCertificate cert;
    cert.min_sum = min_sum;
    cert.margin = min_sum - 360.0;
    cert.method = Method::TwoClassClosedForm;
    cert.composition = best;
    cert.witness = labels_from_word(word_for_composition(m, h, best), ones.label, halves.label);
    canonical_rotation(cert.witness);
    return cert;
}

ArrangementCertificate min_sum_general(std::span<const PointClass> input, const Params& params,
                                       const Tolerance& tol) {
    std::vector<PointClass> classes = nonempty_classes(input);
    std::sort(classes.begin(), classes.end(),
              [](const PointClass& a, const PointClass& b) { return a.label < b.label; });
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].label.empty()) throw DomainError("min_sum_general: empty class label");
        if (i > 0 && classes[i].label == classes[i - 1].label) {
            throw DomainError("min_sum_general: duplicate class label '" + classes[i].label + "'");
        }
    }
    int n = 0;
    for (const auto& c : classes) n += c.count;
    if (n < 2) throw DomainError("min_sum_general: need at least two points");
    if (n > kMaxArrangementPoints) {
        throw ResourceError("min_sum_general: " + std::to_string(n) + " points exceed the limit of " +
                            std::to_string(kMaxArrangementPoints));
    }

    SearchState s;
    s.n = n;
    const std::size_t k = classes.size();
    s.pair.assign(k, std::vector<double>(k, std::numeric_limits<double>::quiet_NaN()));
    s.min_pair = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            if (i == j && classes[i].count < 2) continue;
            const double b = bound(classes[i], classes[j], params, tol);
            s.pair[i][j] = s.pair[j][i] = b;
            s.min_pair = std::min(s.min_pair, b);
        }
    }
    s.remaining.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.remaining[i] = classes[i].count;
    s.seq.assign(static_cast<std::size_t>(n), -1);
    s.seq[0] = 0;
    --s.remaining[0];
    search(s, 1, 0.0);

    ArrangementCertificate cert;
    cert.method = Method::Exhaustive;
    cert.min_sum = s.best;
    cert.margin = s.best - 360.0;
    for (int idx : s.best_seq) cert.witness.push_back(classes[static_cast<std::size_t>(idx)].label);
    return cert;
}

CertifyResult certify_impossible(std::span<const PointClass> classes, const Params& params,
                                 const Tolerance& tol) {
    const std::vector<PointClass> present = nonempty_classes(classes);
    const PointClass* one = nullptr;
    const PointClass* half = nullptr;
    bool closed_form = present.size() <= 2;
    for (const auto& c : present) {
        const PointClass*& slot = c.weight == Weight::One ? one : half;
        if (slot != nullptr) closed_form = false;
        slot = &c;
    }

    CertifyResult result;
    if (closed_form) {
        PointClass ones = one ? *one : PointClass{Weight::One, habitat(Weight::One, params), 0, "one"};
        PointClass halves = half ? *half : PointClass{Weight::Half, habitat(Weight::Half, params), 0, "half"};
        if (one && half && one->label == half->label) {
            throw DomainError("certify_impossible: duplicate class label '" + one->label + "'");
        }
        result.certificate = min_sum_two_class(ones, halves, params, tol);
    } else {
        result.certificate = min_sum_general(present, params, tol);
    }
    result.verified = result.certificate.margin > tol.eps;
    return result;
}

double evaluate_arrangement(std::span<const PointClass> classes, std::span<const std::string> witness,
                            const Params& params, const Tolerance& tol) {
    if (witness.size() < 2) throw DomainError("evaluate_arrangement: need at least two points");
    std::map<std::string, const PointClass*> by_label;
    for (const auto& c : classes) by_label[c.label] = &c;
    auto lookup = [&](const std::string& label) {
        auto it = by_label.find(label);
        if (it == by_label.end()) throw DomainError("evaluate_arrangement: unknown label '" + label + "'");
        return it->second;
    };
    double sum = 0.0;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        const PointClass* a = lookup(witness[i]);
        const PointClass* b = lookup(witness[(i + 1) % witness.size()]);
        sum += bound(*a, *b, params, tol);
    }
    return sum;
}

}  // namespace sigcheck
