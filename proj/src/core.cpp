#include "lmlab/core.hpp"

#include <sstream>

namespace lmlab {

BallParams BallParams::make(int n, int e, int kplus, int kminus) {
    if (n < 1) throw Error(ErrorKind::invalid_parameter, "n must be positive");
    if (e < 0 || e > n) throw Error(ErrorKind::invalid_parameter, "e must satisfy 0 <= e <= n");
    if (kminus < 0 || kplus < kminus)
        throw Error(ErrorKind::invalid_parameter, "magnitudes must satisfy kplus >= kminus >= 0");
    if (e >= 1 && kplus == 0)
        throw Error(ErrorKind::invalid_parameter, "kplus and kminus cannot both be zero");
    return BallParams{n, e, kplus, kminus};
}

BallParams BallParams::symmetric(int n, int e, int s) {
    if (s < 1) throw Error(ErrorKind::invalid_parameter, "s must be at least 1");
    return make(n, e, s, s);
}

int BallParams::s() const {
    if (!is_symmetric()) throw Error(ErrorKind::invalid_parameter, "ball is not symmetric");
    return kplus;
}

std::ostream& operator<<(std::ostream& os, const BallParams& p) {
    os << "(n=" << p.n << ", e=" << p.e;
    if (p.is_symmetric())
        os << ", s=" << p.kplus;
    else
        os << ", k+=" << p.kplus << ", k-=" << p.kminus;
    return os << ')';
}

int IntVector::weight() const {
    int w = 0;
    for (auto c : coords_) w += (c != 0);
    return w;
}

bool IntVector::in_box(std::int64_t radius) const {
    for (auto c : coords_)
        if (c < -radius || c > radius) return false;
    return true;
}

IntVector IntVector::operator-() const {
    IntVector out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = -coords_[i];
    return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "vector lengths differ");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "vector lengths differ");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::string IntVector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << coords_[i];
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << '(' << v.to_string() << ')'; }

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : v.coords()) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool in_ball(const IntVector& v, const BallParams& params) {
    if (v.size() != static_cast<std::size_t>(params.n)) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < -params.kminus || v[i] > params.kplus) return false;
    return v.weight() <= params.e;
}

Integer ball_volume(const BallParams& params) {
    Integer total = 0;
    Integer power = 1;
    for (int i = 0; i <= params.e; ++i) {
        total += binomial(static_cast<unsigned long>(params.n), static_cast<unsigned long>(i)) * power;
        power *= params.width();
    }
    return total;
}

BallStream::BallStream(const BallParams& params, unsigned long long cap)
    : params_(params), current_(static_cast<std::size_t>(params.n)) {
    Integer volume = ball_volume(params);
    if (volume > Integer(std::to_string(cap)))
        throw Error(ErrorKind::cap_exceeded,
                    "ball volume " + volume.get_str() + " exceeds enumeration cap " + std::to_string(cap));
}

void BallStream::reset() {
    started_ = false;
    done_ = false;
}

void BallStream::fill_minimal(std::size_t from, int budget) {
    const std::int64_t smallest = -params_.kminus;
    for (std::size_t i = from; i < current_.size(); ++i) {
        if (smallest != 0 && budget > 0) {
            current_[i] = smallest;
            --budget;
        } else {
            current_[i] = 0;
        }
    }
}

bool BallStream::next(IntVector& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        fill_minimal(0, params_.e);
        out = current_;
        return true;
    }
    const auto n = current_.size();
    for (std::size_t pos = n; pos-- > 0;) {
        int prefix_weight = 0;
        for (std::size_t j = 0; j < pos; ++j) prefix_weight += (current_[j] != 0);
        std::int64_t candidate = current_[pos] + 1;
        if (candidate > params_.kplus) continue;
        if (candidate != 0 && prefix_weight + 1 > params_.e) {
            if (candidate > 0) continue;
            candidate = 0;
        }
        current_[pos] = candidate;
        fill_minimal(pos + 1, params_.e - prefix_weight - (candidate != 0));
        out = current_;
        return true;
    }
    done_ = true;
    return false;
}

std::vector<IntVector> enumerate_ball(const BallParams& params, unsigned long long cap) {
    BallStream stream(params, cap);
    std::vector<IntVector> out;
    out.reserve(ball_volume(params).get_ui());
    IntVector v;
    while (stream.next(v)) out.push_back(v);
    return out;
}

DsMatrix::DsMatrix(int s) : s_(s) {
    if (s < 1) throw Error(ErrorKind::invalid_parameter, "s must be at least 1");
    const int d = dim();
    entries_.resize(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int gap = i > j ? i - j : j - i;
            entries_[static_cast<std::size_t>(i * d + j)] = gap == 0 ? 0 : (gap <= s ? 1 : 2);
        }
}

int DsMatrix::at(int x, int y) const {
    if (x < -s_ || x > s_ || y < -s_ || y > s_)
        throw Error(ErrorKind::invalid_parameter, "symbol outside [-s, s]");
    return entry(x + s_, y + s_);
}

DsMatrix ds_matrix(int s) { return DsMatrix(s); }

Rational volume_ratio_bound(int n, int e, int r, int s) {
    if (r < 1) throw Error(ErrorKind::invalid_parameter, "r must be at least 1");
    if (s < 1) throw Error(ErrorKind::invalid_parameter, "s must be at least 1");
    if (e < 0 || n < 1) throw Error(ErrorKind::invalid_parameter, "need n >= 1 and e >= 0");
    const bool ok = r == 1 ? e < n - 1 : e + r < n - 1;
    if (!ok)
        throw Error(ErrorKind::hypotheses_unmet,
                    r == 1 ? "ratio bound needs e < n - 1" : "ratio bound needs e + r < n - 1");
    const auto ur = static_cast<unsigned long>(r);
    Rational out(ipow(Integer(n - e - r + 1) * 2 * s, ur), ipow(Integer(e + r), ur));
    out.canonicalize();
    return out;
}

}  // namespace lmlab
