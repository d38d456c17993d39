#pragma once
// Sampled-curve plumbing: two-column CSV in both directions and the a:b:n
// grid syntax used by the command line. Parsing goes through from_chars so
// the decimal separator is '.' regardless of locale.

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace jlogan {

struct SampledCurve {
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline bool parse_double(std::string_view s, double& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

// Two columns separated by a comma (or whitespace). A first line that does
// not parse as numbers is treated as a header; any later unparsable line is
// an error.
inline SampledCurve read_csv(std::istream& in) {
    SampledCurve c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v(line);
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r'))
            v.remove_suffix(1);
        if (v.empty()) continue;
        std::size_t sep = v.find(',');
        if (sep == std::string_view::npos) sep = v.find_first_of(" \t");
        double a = 0.0, b = 0.0;
        bool ok = sep != std::string_view::npos && detail::parse_double(v.substr(0, sep), a) &&
                  detail::parse_double(v.substr(sep + 1), b);
        if (!ok) {
            if (lineno == 1 && c.x.empty()) continue;  // header
            throw std::invalid_argument("read_csv: cannot parse line " + std::to_string(lineno));
        }
        c.x.push_back(a);
        c.y.push_back(b);
    }
    return c;
}

inline void write_csv(std::ostream& out, const SampledCurve& c,
                      const std::string& header = {}) {
    if (!header.empty()) out << header << "\n";
    char buf[64];
    for (std::size_t i = 0; i < c.x.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", c.x[i], c.y[i]);
        out << buf;
    }
}

// "a:b:n" -> n equally spaced points from a to b inclusive (n >= 2, a < b).
inline std::vector<double> parse_grid(const std::string& spec) {
    std::size_t c1 = spec.find(':');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    double a = 0.0, b = 0.0;
    long n = 0;
    bool ok = c2 != std::string::npos &&
              detail::parse_double(std::string_view(spec).substr(0, c1), a) &&
              detail::parse_double(std::string_view(spec).substr(c1 + 1, c2 - c1 - 1), b);
    if (ok) {
        std::string_view tail = std::string_view(spec).substr(c2 + 1);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
        ok = ec == std::errc{} && ptr == tail.data() + tail.size();
    }
    if (!ok || n < 2 || !(a < b))
        throw std::invalid_argument("parse_grid: expected a:b:n with a < b and n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j)
        g[static_cast<std::size_t>(j)] = a + (b - a) * static_cast<double>(j) / (n - 1);
    return g;
}

// Piecewise-linear view of a sampled curve, zero outside the sample range.
// Sample abscissae must be strictly increasing.
struct LinearInterpolant {
    SampledCurve samples;

    explicit LinearInterpolant(SampledCurve c) : samples(std::move(c)) {
        if (samples.x.size() < 2)
            throw std::invalid_argument("interpolant: need at least two samples");
        for (std::size_t i = 1; i < samples.x.size(); ++i)
            if (!(samples.x[i] > samples.x[i - 1]))
                throw std::invalid_argument("interpolant: abscissae must increase");
    }

    double operator()(double t) const {
        const auto& x = samples.x;
        const auto& y = samples.y;
        if (t < x.front() || t > x.back()) return 0.0;
        std::size_t lo = 0, hi = x.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            (x[mid] <= t ? lo : hi) = mid;
        }
        double w = (t - x[lo]) / (x[lo + 1] - x[lo]);
        return y[lo] + w * (y[lo + 1] - y[lo]);
    }
};

}  // namespace jlogan
