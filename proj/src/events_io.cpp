#include "ppacf/events_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ppacf/errors.hpp"

namespace ppacf {

namespace {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_double(std::string_view field, std::size_t line_no,
                    const char* what) {
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() ||
        !std::isfinite(v)) {
        throw invalid_argument("line " + std::to_string(line_no) +
                               ": cannot parse " + what + " from '" +
                               std::string(field) + "'");
    }
    return v;
}

int parse_index(std::string_view field, std::size_t line_no) {
    int v = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw invalid_argument("line " + std::to_string(line_no) +
                               ": cannot parse t from '" + std::string(field) +
                               "'");
    }
    return v;
}

}  // namespace

LoadedEvents read_events(const std::filesystem::path& path,
                         const Region& region) {
    std::ifstream in(path);
    if (!in) {
        throw invalid_argument("cannot open events file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw invalid_argument("events file is empty: " + path.string());
    }
    const auto header = split_fields(line);
    bool spatial = false;
    if (header.size() == 2 && header[0] == "t" && header[1] == "s") {
        spatial = false;
    } else if (header.size() == 3 && header[0] == "t" && header[1] == "x" &&
               header[2] == "y") {
        spatial = true;
    } else {
        throw invalid_argument("events header must be 't,s' or 't,x,y', got '" +
                               line + "'");
    }
    if (spatial != (region.kind() == RegionKind::rectangle)) {
        throw invalid_argument(
            "event coordinate dimension does not match the region kind");
    }

    std::vector<EventRecord> records;
    std::size_t line_no = 1;
    std::size_t dropped = 0;
    int n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(header.size()) +
                                   " columns, got " +
                                   std::to_string(fields.size()));
        }
        const int t = parse_index(fields[0], line_no);
        if (t < 1) {
            throw invalid_argument("line " + std::to_string(line_no) +
                                   ": t must be a positive integer, got " +
                                   std::to_string(t));
        }
        Point p;
        p.x = parse_double(fields[1], line_no, spatial ? "x" : "s");
        if (spatial) p.y = parse_double(fields[2], line_no, "y");
        n = std::max(n, t);
        if (!region.contains(p)) {
            ++dropped;
            continue;
        }
        records.push_back({t, p});
    }
    if (n == 0) {
        throw invalid_argument("events file has no data rows: " + path.string());
    }

    std::vector<std::vector<Point>> buckets(static_cast<std::size_t>(n));
    for (const EventRecord& r : records) {
        buckets[static_cast<std::size_t>(r.t - 1)].push_back(r.coords);
    }
    std::vector<PointPattern> patterns;
    patterns.reserve(buckets.size());
    for (auto& b : buckets) {
        patterns.emplace_back(region, std::move(b));
    }
    return LoadedEvents{PointPatternSeries(std::move(patterns)), dropped};
}

void write_events(const PointPatternSeries& series,
                  const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw invalid_argument("cannot open output file: " + path.string());
    }
    const bool spatial = series.region().kind() == RegionKind::rectangle;
    out << (spatial ? "t,x,y\n" : "t,s\n");
    for (int t = 0; t < series.length(); ++t) {
        for (const Point& p :
             series.patterns()[static_cast<std::size_t>(t)].points()) {
            out << (t + 1) << ',' << format_full(p.x);
            if (spatial) out << ',' << format_full(p.y);
            out << '\n';
        }
    }
    if (!out) {
        throw invalid_argument("failed writing events to " + path.string());
    }
}

std::string autocorrelogram_csv(const Autocorrelogram& acf) {
    std::ostringstream out;
    out << "lag,rho_hat,upper_bound\n";
    for (std::size_t i = 0; i < acf.rho.size(); ++i) {
        out << (i + 1) << ',' << format_full(acf.rho[i]) << ',';
        if (acf.upper_bounds) out << format_full((*acf.upper_bounds)[i]);
        out << '\n';
    }
    return out.str();
}

std::string autocorrelogram_json(const Autocorrelogram& acf) {
    nlohmann::json j;
    j["meta"]["n"] = acf.meta.n;
    j["meta"]["d"] = acf.meta.d;
    j["meta"]["max_lag"] = acf.meta.max_lag;
    j["meta"]["alpha"] =
        acf.meta.alpha ? nlohmann::json(*acf.meta.alpha) : nlohmann::json();
    j["meta"]["mc_draws"] =
        acf.meta.mc_draws ? nlohmann::json(*acf.meta.mc_draws) : nlohmann::json();
    j["meta"]["seed"] =
        acf.meta.seed ? nlohmann::json(*acf.meta.seed) : nlohmann::json();
    j["trace_gamma0"] = acf.trace_gamma0;
    std::vector<int> lags(acf.rho.size());
    for (std::size_t i = 0; i < lags.size(); ++i) lags[i] = static_cast<int>(i + 1);
    j["lags"] = lags;
    j["rho_hat"] = acf.rho;
    j["upper_bounds"] =
        acf.upper_bounds ? nlohmann::json(*acf.upper_bounds) : nlohmann::json();
    return j.dump(2) + "\n";
}

void write_autocorrelogram(const Autocorrelogram& acf,
                           const std::filesystem::path& path,
                           AcfFormat format) {
    std::ofstream out(path);
    if (!out) {
        throw invalid_argument("cannot open output file: " + path.string());
    }
    out << (format == AcfFormat::csv ? autocorrelogram_csv(acf)
                                     : autocorrelogram_json(acf));
    if (!out) {
        throw invalid_argument("failed writing autocorrelogram to " + path.string());
    }
}

}  // namespace ppacf
