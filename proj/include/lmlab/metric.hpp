#pragma once

#include <optional>
#include <vector>

#include "lmlab/core.hpp"

namespace lmlab {

/// A finite set of pairwise distinct codewords in Z^n.
class Code {
public:
    /// Throws dimension-mismatch for wrong-length words and
    /// invalid-parameter for duplicates.
    Code(int n, std::vector<IntVector> words);

    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<IntVector>& words() const { return words_; }

private:
    int n_;
    std::vector<IntVector> words_;
};

/// N_s + 2 M_s, or 2n+1 when some coordinate differs by more than 2s.
int ds_distance(const IntVector& x, const IntVector& y, int s);

/// Minimum d_s over unordered pairs; throws too-few-codewords below 2 words.
int min_distance(const Code& code, int s);

enum class CorrectionMethod { distance, disjointness };

/// Distance method: min_distance >= 2e+1. Disjointness method: translated
/// balls c + V(n,e,s) pairwise disjoint, by explicit set intersection.
bool is_e_correcting(const Code& code, int e, int s, CorrectionMethod method,
                     const Limits& limits = kDefaultLimits);

struct DifferenceSetCheck {
    bool equal = false;
    std::optional<IntVector> witness;  // in the symmetric difference when !equal
    std::size_t difference_count = 0;
    std::size_t distance_ball_count = 0;
};

/// Compares {e1 - e2 : e1, e2 in V(n,t,s)} with {v in [-2s,2s]^n : d_s(v,0) <= 2t}.
DifferenceSetCheck difference_set_equivalence(int n, int t, int s, const Limits& limits = kDefaultLimits);

}  // namespace lmlab
