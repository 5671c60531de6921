#include "lmlab/metric.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace lmlab {

Code::Code(int n, std::vector<IntVector> words) : n_(n), words_(std::move(words)) {
    if (n < 1) throw Error(ErrorKind::invalid_parameter, "n must be positive");
    std::set<IntVector> seen;
    for (const auto& w : words_) {
        if (w.size() != static_cast<std::size_t>(n))
            throw Error(ErrorKind::dimension_mismatch, "codeword " + w.to_string() + " has wrong length");
        if (!seen.insert(w).second)
            throw Error(ErrorKind::invalid_parameter, "duplicate codeword " + w.to_string());
    }
}

int ds_distance(const IntVector& x, const IntVector& y, int s) {
    if (x.size() != y.size()) throw Error(ErrorKind::dimension_mismatch, "vector lengths differ");
    if (s < 1) throw Error(ErrorKind::invalid_parameter, "s must be at least 1");
    int small = 0;
    int large = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t d = x[i] - y[i];
        if (d < 0) d = -d;
        if (d == 0) continue;
        if (d <= s)
            ++small;
        else if (d <= 2 * static_cast<std::int64_t>(s))
            ++large;
        else
            return 2 * static_cast<int>(x.size()) + 1;
    }
    return small + 2 * large;
}

int min_distance(const Code& code, int s) {
    if (code.size() < 2) throw Error(ErrorKind::too_few_codewords, "need at least two codewords");
    const auto& w = code.words();
    int best = 2 * code.n() + 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, ds_distance(w[i], w[j], s));
    return best;
}

bool is_e_correcting(const Code& code, int e, int s, CorrectionMethod method, const Limits& limits) {
    if (e < 0 || e > code.n()) throw Error(ErrorKind::invalid_parameter, "e must satisfy 0 <= e <= n");
    if (code.size() < 2) return true;
    if (method == CorrectionMethod::distance) return min_distance(code, s) >= 2 * e + 1;

    const BallParams params = BallParams::symmetric(code.n(), e, s);
    Integer cells = ball_volume(params) * static_cast<unsigned long>(code.size());
    if (cells > Integer(std::to_string(limits.disjointness_cells)))
        throw Error(ErrorKind::cap_exceeded, "disjointness check needs " + cells.get_str() + " cells");
    const auto ball = enumerate_ball(params, limits.disjointness_cells);
    std::unordered_set<IntVector, IntVectorHash> covered;
    covered.reserve(static_cast<std::size_t>(cells.get_ui()));
    for (const auto& c : code.words())
        for (const auto& v : ball)
            if (!covered.insert(c + v).second) return false;
    return true;
}

DifferenceSetCheck difference_set_equivalence(int n, int t, int s, const Limits& limits) {
    const BallParams params = BallParams::symmetric(n, t, s);
    Integer volume = ball_volume(params);
    if (volume * volume > Integer(std::to_string(limits.equivalence_pairs)))
        throw Error(ErrorKind::cap_exceeded, "difference set needs " + Integer(volume * volume).get_str() + " pairs");
    Integer box = ipow(4 * s + 1, static_cast<unsigned long>(n));
    if (box > Integer(std::to_string(limits.equivalence_pairs)))
        throw Error(ErrorKind::cap_exceeded, "box [-2s,2s]^n has " + box.get_str() + " points");

    const auto ball = enumerate_ball(params);
    std::set<IntVector> differences;
    for (const auto& a : ball)
        for (const auto& b : ball) differences.insert(a - b);

    std::set<IntVector> near;
    const IntVector zero(static_cast<std::size_t>(n));
    IntVector v(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -2 * s;
    for (;;) {
        if (ds_distance(v, zero, s) <= 2 * t) near.insert(v);
        std::size_t pos = v.size();
        while (pos > 0 && v[pos - 1] == 2 * s) v[--pos] = -2 * s;
        if (pos == 0) break;
        ++v[pos - 1];
    }

    DifferenceSetCheck out;
    out.difference_count = differences.size();
    out.distance_ball_count = near.size();
    std::vector<IntVector> diff;
    std::set_symmetric_difference(differences.begin(), differences.end(), near.begin(), near.end(),
                                  std::back_inserter(diff));
    out.equal = diff.empty();
    if (!diff.empty()) out.witness = diff.front();
    return out;
}

}  // namespace lmlab
