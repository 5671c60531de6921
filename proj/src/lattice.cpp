#include "lmlab/lattice.hpp"

#include <map>
#include <unordered_map>

namespace lmlab {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::dimension_mismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::dimension_mismatch, "matrix product shapes");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw Error(ErrorKind::invalid_parameter, "determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

Integer truncated_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // pivot: smallest nonzero magnitude in the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            swap_rows(a, t, pr);
            swap_rows(u, t, pr);
            swap_cols(a, t, pc);
            swap_cols(v, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = -truncated_quotient(a(i, t), a(t, t));
                add_row(a, i, t, q);
                add_row(u, i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = -truncated_quotient(a(t, j), a(t, t));
                add_col(a, j, t, q);
                add_col(v, j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        add_row(a, t, i, 1);
                        add_row(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }

    SmithForm out{std::move(u), std::move(v), {}};
    for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
    return out;
}

Integer lattice_determinant(const IntMatrix& generator) {
    Integer det = abs(determinant(generator));
    if (det == 0) throw Error(ErrorKind::singular_matrix, "generator matrix is singular");
    return det;
}

Lattice::Lattice(IntMatrix generator) : gen_(std::move(generator)) {
    if (gen_.rows() != gen_.cols() || gen_.rows() == 0)
        throw Error(ErrorKind::invalid_parameter, "generator must be a non-empty square matrix");
    det_abs_ = lattice_determinant(gen_);
}

Lattice Lattice::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    return Lattice(IntMatrix::from_rows(rows));
}

IntVector Lattice::row(std::size_t i) const {
    IntVector out(gen_.cols());
    for (std::size_t j = 0; j < gen_.cols(); ++j) out[j] = to_int64(gen_(i, j));
    return out;
}

QuotientMap::QuotientMap(const Lattice& lattice) {
    const SmithForm snf = smith_normal_form(lattice.generator());
    const std::size_t n = snf.right.rows();
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        const Integer& d = snf.diagonal[i];
        if (d == 1) continue;
        std::vector<Integer> column(n);
        for (std::size_t j = 0; j < n; ++j) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), snf.right(j, i).get_mpz_t(), d.get_mpz_t());
            column[j] = r;
        }
        columns_.push_back(std::move(column));
        moduli_.push_back(d);
    }
    small_ = true;
    const Integer limit = Integer(1) << 62;
    for (const auto& d : moduli_)
        if (d >= limit) small_ = false;
    if (small_) {
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            small_moduli_.push_back(to_int64(moduli_[i]));
            std::vector<std::int64_t> column;
            for (const auto& c : columns_[i]) column.push_back(to_int64(c));
            small_columns_.push_back(std::move(column));
        }
    }
}

std::vector<Integer> QuotientMap::residue(const IntVector& x) const {
    std::vector<Integer> out;
    out.reserve(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (x.size() != columns_[i].size()) throw Error(ErrorKind::dimension_mismatch, "vector length");
        Integer acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += columns_[i][j] * static_cast<long>(x[j]);
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), moduli_[i].get_mpz_t());
        out.push_back(acc);
    }
    return out;
}

std::vector<std::int64_t> QuotientMap::small_residue(const IntVector& x) const {
    if (!small_) throw Error(ErrorKind::precondition_violated, "moduli too large for 64-bit residues");
    std::vector<std::int64_t> out(small_moduli_.size());
    for (std::size_t i = 0; i < small_moduli_.size(); ++i) {
        const std::int64_t d = small_moduli_[i];
        __int128 acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            acc += static_cast<__int128>(small_columns_[i][j]) * static_cast<__int128>(x[j] % d);
            acc %= d;
        }
        if (acc < 0) acc += d;
        out[i] = static_cast<std::int64_t>(acc);
    }
    return out;
}

bool QuotientMap::contains(const IntVector& x) const {
    for (const auto& r : residue(x))
        if (r != 0) return false;
    return true;
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::packs: return "packs";
        case Verdict::tiles: return "tiles";
        case Verdict::fails: return "fails";
    }
    return "fails";
}

Verdict parse_verdict(const std::string& text) {
    if (text == "packs") return Verdict::packs;
    if (text == "tiles") return Verdict::tiles;
    if (text == "fails") return Verdict::fails;
    throw Error(ErrorKind::parse_error, "unknown verdict '" + text + "'");
}

namespace {

struct SmallKeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        return IntVectorHash{}(IntVector(v));
    }
};

template <class Map, class KeyFn>
VerificationResult scan_residues(const BallParams& params, const Limits& limits, KeyFn key) {
    VerificationResult out;
    out.volume = ball_volume(params);
    Map seen;
    BallStream stream(params, limits.enumeration);
    IntVector v;
    while (stream.next(v)) {
        auto [it, inserted] = seen.emplace(key(v), v);
        if (!inserted) {
            out.verdict = Verdict::fails;
            out.witness = std::make_pair(v, it->second);
            return out;
        }
    }
    out.verdict = Verdict::packs;
    return out;
}

}  // namespace

VerificationResult verify_lattice_packing(const Lattice& lattice, const BallParams& params, const Limits& limits) {
    if (params.n != lattice.n()) throw Error(ErrorKind::dimension_mismatch, "lattice and ball dimensions differ");
    const QuotientMap quotient(lattice);
    VerificationResult out;
    if (quotient.is_small()) {
        using Map = std::unordered_map<std::vector<std::int64_t>, IntVector, SmallKeyHash>;
        out = scan_residues<Map>(params, limits, [&](const IntVector& v) { return quotient.small_residue(v); });
    } else {
        using Map = std::map<std::vector<Integer>, IntVector>;
        out = scan_residues<Map>(params, limits, [&](const IntVector& v) { return quotient.residue(v); });
    }
    out.index = lattice.det_abs();
    return out;
}

VerificationResult verify_lattice_tiling(const Lattice& lattice, const BallParams& params, const Limits& limits) {
    VerificationResult out = verify_lattice_packing(lattice, params, limits);
    if (out.verdict == Verdict::packs && out.volume == out.index) out.verdict = Verdict::tiles;
    return out;
}

Rational lattice_density(const Lattice& lattice, const BallParams& params) {
    Rational out(ball_volume(params), lattice_determinant(lattice));
    out.canonicalize();
    return out;
}

}  // namespace lmlab
