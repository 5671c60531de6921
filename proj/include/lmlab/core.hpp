#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "lmlab/error.hpp"
#include "lmlab/numeric.hpp"

namespace lmlab {

/// Parameters of the limited-magnitude error ball B(n, e, k+, k-): integer
/// vectors of Hamming weight at most e with entries in [-k-, k+].
struct BallParams {
    int n = 1;
    int e = 0;
    int kplus = 1;
    int kminus = 1;

    /// Validating constructor; throws invalid-parameter.
    static BallParams make(int n, int e, int kplus, int kminus);
    /// k+ = k- = s, s >= 1.
    static BallParams symmetric(int n, int e, int s);

    bool is_symmetric() const { return kplus == kminus; }
    /// Magnitude of the symmetric ball; throws unless kplus == kminus.
    int s() const;
    int width() const { return kplus + kminus; }

    friend bool operator==(const BallParams&, const BallParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const BallParams& p);

/// A point of Z^n.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : coords_(n, 0) {}
    explicit IntVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    /// Number of nonzero coordinates.
    int weight() const;
    bool in_box(std::int64_t radius) const;

    IntVector operator-() const;
    friend IntVector operator+(const IntVector& a, const IntVector& b);
    friend IntVector operator-(const IntVector& a, const IntVector& b);

    friend auto operator<=>(const IntVector&, const IntVector&) = default;
    friend bool operator==(const IntVector&, const IntVector&) = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntVector& v);

struct IntVectorHash {
    std::size_t operator()(const IntVector& v) const noexcept;
};

bool in_ball(const IntVector& v, const BallParams& params);

/// |B(n,e,k+,k-)| = sum_{i<=e} C(n,i) (k+ + k-)^i, exact.
Integer ball_volume(const BallParams& params);

/// Restartable lexicographic stream over the ball (coordinates ordered from
/// -k- to k+). Construction checks the volume against the enumeration cap.
class BallStream {
public:
    explicit BallStream(const BallParams& params, unsigned long long cap = kDefaultLimits.enumeration);

    /// Writes the next vector and returns true, or returns false at the end.
    bool next(IntVector& out);
    void reset();

    const BallParams& params() const { return params_; }

private:
    void fill_minimal(std::size_t from, int budget);

    BallParams params_;
    IntVector current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<IntVector> enumerate_ball(const BallParams& params,
                                      unsigned long long cap = kDefaultLimits.enumeration);

/// The symbol-pair weight matrix indexed by x, y in [-s, s]: 0 on the
/// diagonal, 1 when 1 <= |x-y| <= s, 2 when s+1 <= |x-y| <= 2s.
class DsMatrix {
public:
    explicit DsMatrix(int s);

    int s() const { return s_; }
    int dim() const { return 2 * s_ + 1; }
    /// Entry for symbols x, y in [-s, s].
    int at(int x, int y) const;
    /// Entry for zero-based indices i, j in [0, 2s].
    int entry(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim() + j)]; }

private:
    int s_;
    std::vector<int> entries_;
};

DsMatrix ds_matrix(int s);

/// Lower bound on |V(n,e+r,s)| / |V(n,e,s)|:
///   ((n-e-r+1)/(e+r))^r (2s)^r.
/// Valid for e < n-1 when r = 1 and for e + r < n - 1 otherwise;
/// throws hypotheses-unmet outside that range.
Rational volume_ratio_bound(int n, int e, int r, int s);

}  // namespace lmlab
