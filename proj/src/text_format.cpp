#include "lmlab/text_format.hpp"

#include <charconv>
#include <sstream>

namespace lmlab {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view token) {
    token = strip(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorKind::parse_error, "bad integer '" + std::string(token) + "'");
    return value;
}

}  // namespace

IntVector parse_vector(std::string_view text) {
    std::vector<std::int64_t> coords;
    for (auto token : split(strip(text), ',')) coords.push_back(parse_int(token));
    return IntVector(std::move(coords));
}

std::vector<IntVector> parse_vector_list(std::string_view text) {
    std::vector<IntVector> out;
    text = strip(text);
    if (text.empty()) return out;
    for (auto row : split(text, ';')) out.push_back(parse_vector(row));
    return out;
}

Lattice parse_lattice(std::string_view text) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& v : parse_vector_list(text)) rows.push_back(v.coords());
    if (rows.empty()) throw Error(ErrorKind::parse_error, "empty generator matrix");
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw Error(ErrorKind::parse_error, "generator matrix must be square");
    return Lattice::from_rows(rows);
}

std::string format_vector(const IntVector& v) { return v.to_string(); }

std::string format_lattice(const Lattice& lattice) {
    std::ostringstream os;
    const auto& g = lattice.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? "," : "") << g(i, j).get_str();
    }
    return os.str();
}

}  // namespace lmlab
