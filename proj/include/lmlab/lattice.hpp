#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmlab/core.hpp"

namespace lmlab {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Signed determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// U * A * V = diag(d_1, ..., d_n) with U, V unimodular, d_i >= 0 and
/// d_i | d_{i+1}.
struct SmithForm {
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Full-rank sublattice of Z^n spanned by the rows of an n x n generator.
class Lattice {
public:
    /// Throws singular-matrix when det = 0, invalid-parameter when not square.
    explicit Lattice(IntMatrix generator);
    static Lattice from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int n() const { return static_cast<int>(gen_.rows()); }
    const IntMatrix& generator() const { return gen_; }
    /// Cached |det|, i.e. the index |Z^n / L|.
    const Integer& det_abs() const { return det_abs_; }
    IntVector row(std::size_t i) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.gen_ == b.gen_; }

private:
    IntMatrix gen_;
    Integer det_abs_;
};

/// Exact |det L|; throws singular-matrix.
Integer lattice_determinant(const IntMatrix& generator);
inline Integer lattice_determinant(const Lattice& lattice) { return lattice_determinant(lattice.generator()); }

/// Canonical coordinates in Z^n / L = Z_{d_1} x ... x Z_{d_n} obtained from
/// the Smith form. Components with d_i = 1 are dropped; the remaining ones
/// lie in [0, d_i).
class QuotientMap {
public:
    explicit QuotientMap(const Lattice& lattice);

    std::vector<Integer> residue(const IntVector& x) const;
    bool contains(const IntVector& x) const;
    /// Nontrivial invariant factors d_i > 1.
    const std::vector<Integer>& moduli() const { return moduli_; }

    /// True when every modulus fits in 62 bits, enabling small_residue().
    bool is_small() const { return small_; }
    std::vector<std::int64_t> small_residue(const IntVector& x) const;

private:
    std::vector<std::vector<Integer>> columns_;  // column i of V reduced mod d_i
    std::vector<Integer> moduli_;
    bool small_ = false;
    std::vector<std::vector<std::int64_t>> small_columns_;
    std::vector<std::int64_t> small_moduli_;
};

enum class Verdict { packs, tiles, fails };

std::string to_string(Verdict verdict);
Verdict parse_verdict(const std::string& text);

struct VerificationResult {
    Verdict verdict = Verdict::fails;
    std::optional<std::pair<IntVector, IntVector>> witness;  // congruent mod L when verdict = fails
    Integer volume;
    Integer index;
};

/// Packs iff every ball vector has a distinct residue modulo L.
VerificationResult verify_lattice_packing(const Lattice& lattice, const BallParams& params,
                                          const Limits& limits = kDefaultLimits);
/// Tiles iff the ball packs and its volume equals |det L|.
VerificationResult verify_lattice_tiling(const Lattice& lattice, const BallParams& params,
                                         const Limits& limits = kDefaultLimits);
/// ball_volume / |det L|.
Rational lattice_density(const Lattice& lattice, const BallParams& params);

}  // namespace lmlab
