#include "trim/polar_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

namespace trim {

namespace {

constexpr double kCoverageTolDeg = 1e-6;

bool near(double a, double b) { return std::abs(a - b) <= kCoverageTolDeg; }

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view field, int line) {
    field = strip(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("not a number: '" + std::string(field) + "'", line);
    return value;
}

} // namespace

void PolarTable::validate() const {
    if (alpha_deg.size() != cl.size() || alpha_deg.size() != cd.size())
        throw ValidationError("PolarTable: column lengths differ");
    if (alpha_deg.size() < 2)
        throw ValidationError("PolarTable: need at least 2 rows");
    for (std::size_t i = 0; i < alpha_deg.size(); ++i) {
        if (!std::isfinite(alpha_deg[i]) || !std::isfinite(cl[i]) || !std::isfinite(cd[i]))
            throw ValidationError("PolarTable: non-finite entry in row " + std::to_string(i + 1));
        if (!(cd[i] > 0.0))
            throw ValidationError("PolarTable: cd <= 0 in row " + std::to_string(i + 1) +
                                  " (alpha = " + std::to_string(alpha_deg[i]) + " deg)");
        if (i > 0 && !(alpha_deg[i] > alpha_deg[i - 1]))
            throw ValidationError("PolarTable: alpha not strictly increasing at row " +
                                  std::to_string(i + 1));
    }
}

std::optional<PolarCoverage> PolarTable::coverage() const {
    if (alpha_deg.empty())
        return std::nullopt;
    const double lo = alpha_deg.front();
    const double hi = alpha_deg.back();
    if (near(lo, 0.0) && near(hi, 90.0))
        return PolarCoverage::ZeroTo90;
    if (near(lo, 0.0) && near(hi, 180.0))
        return PolarCoverage::ZeroTo180;
    if (near(lo, -180.0) && near(hi, 180.0))
        return PolarCoverage::FullCircle;
    return std::nullopt;
}

PolarTable parse_polar_csv(std::istream& in) {
    PolarTable table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;

    struct Row {
        double a, cl, cd;
        int line;
    };
    std::vector<Row> rows;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = strip(line);
        if (sv.empty())
            continue;
        if (sv.front() == '#') {
            sv.remove_prefix(1);
            sv = strip(sv);
            if (sv.starts_with("name="))
                table.name = std::string(strip(sv.substr(5)));
            else if (sv.starts_with("Re="))
                table.reynolds = parse_number(sv.substr(3), line_no);
            else if (sv.starts_with("M="))
                table.mach = parse_number(sv.substr(2), line_no);
            continue; // other # lines are comments
        }
        if (!header_seen) {
            if (sv != "alpha_deg,cl,cd")
                throw ParseError("expected header 'alpha_deg,cl,cd', got '" + std::string(sv) + "'",
                                 line_no);
            header_seen = true;
            continue;
        }
        const auto c1 = sv.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : sv.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            sv.find(',', c2 + 1) != std::string_view::npos)
            throw ParseError("expected 3 comma-separated fields", line_no);
        rows.push_back({parse_number(sv.substr(0, c1), line_no),
                        parse_number(sv.substr(c1 + 1, c2 - c1 - 1), line_no),
                        parse_number(sv.substr(c2 + 1), line_no), line_no});
    }
    if (!header_seen)
        throw ParseError("missing header 'alpha_deg,cl,cd'", line_no + 1);

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.a < b.a; });
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].a == rows[i + 1].a)
            throw ValidationError("duplicate alpha " + std::to_string(rows[i].a) +
                                  " deg (lines " + std::to_string(rows[i].line) + ", " +
                                  std::to_string(rows[i + 1].line) + ")");
    for (const Row& r : rows) {
        if (!(r.cd > 0.0))
            throw ValidationError("cd <= 0 at alpha = " + std::to_string(r.a) + " deg (line " +
                                  std::to_string(r.line) + ")");
        table.alpha_deg.push_back(r.a);
        table.cl.push_back(r.cl);
        table.cd.push_back(r.cd);
    }
    table.validate();
    return table;
}

PolarTable parse_polar_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_polar_csv(in);
}

PolarTable load_polar_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open polar file: " + path);
    return parse_polar_csv(in);
}

std::string write_polar_csv(const PolarTable& table) {
    std::ostringstream out;
    out.precision(17);
    if (!table.name.empty())
        out << "# name=" << table.name << "\n";
    if (table.reynolds)
        out << "# Re=" << *table.reynolds << "\n";
    if (table.mach)
        out << "# M=" << *table.mach << "\n";
    out << "alpha_deg,cl,cd\n";
    for (std::size_t i = 0; i < table.size(); ++i)
        out << table.alpha_deg[i] << ',' << table.cl[i] << ',' << table.cd[i] << "\n";
    return out.str();
}

PolarTable extend_symmetric(const PolarTable& table) {
    table.validate();
    if (table.coverage() != PolarCoverage::ZeroTo180)
        throw RangeError("extend_symmetric requires coverage [0, 180] deg");

    PolarTable out;
    out.reynolds = table.reynolds;
    out.mach = table.mach;
    out.name = table.name;
    const std::size_t n = table.size();
    // Mirrored rows first (alpha > 0 descending becomes -alpha ascending),
    // then the original block starting at alpha = 0 (kept once).
    for (std::size_t i = n; i-- > 1;) {
        out.alpha_deg.push_back(-table.alpha_deg[i]);
        out.cl.push_back(-table.cl[i]);
        out.cd.push_back(table.cd[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.alpha_deg.push_back(table.alpha_deg[i]);
        out.cl.push_back(table.cl[i]);
        out.cd.push_back(table.cd[i]);
    }
    out.validate();
    return out;
}

PolarTable extend_bisymmetric(const PolarTable& table) {
    table.validate();
    if (table.coverage() != PolarCoverage::ZeroTo90)
        throw RangeError("extend_bisymmetric requires coverage [0, 90] deg");

    PolarTable out;
    out.reynolds = table.reynolds;
    out.mach = table.mach;
    out.name = table.name;
    const std::size_t n = table.size();
    auto push = [&out](double a, double cl, double cd) {
        out.alpha_deg.push_back(a);
        out.cl.push_back(cl);
        out.cd.push_back(cd);
    };
    // [-180, -90]: c(a) = c(a + 180) by pi-periodicity.
    for (std::size_t i = 0; i < n; ++i)
        push(table.alpha_deg[i] - 180.0, table.cl[i], table.cd[i]);
    // (-90, 0): mirror of (0, 90).
    for (std::size_t i = n - 1; i-- > 1;)
        push(-table.alpha_deg[i], -table.cl[i], table.cd[i]);
    // [0, 90]: the original block.
    for (std::size_t i = 0; i < n; ++i)
        push(table.alpha_deg[i], table.cl[i], table.cd[i]);
    // (90, 180]: c(a) = c(a - 180) = mirror of (0, 90].
    for (std::size_t i = n - 1; i-- > 0;)
        push(180.0 - table.alpha_deg[i], -table.cl[i], table.cd[i]);
    out.validate();
    return out;
}

namespace {

/// Piecewise-linear evaluator over a full-circle grid, radians.
class LinearPolar {
public:
    explicit LinearPolar(const PolarTable& t) : cl_(t.cl), cd_(t.cd) {
        alpha_rad_.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            alpha_rad_[i] = t.alpha_deg[i] * (kPi / 180.0);
    }

    double lift(double a) const { return eval(cl_, a); }
    double drag(double a) const { return eval(cd_, a); }

private:
    double eval(const std::vector<double>& y, double a) const {
        // Callers pass canonical angles; clamp guards the rounding at the
        // +-pi seam so continuation stays periodic.
        a = std::clamp(a, alpha_rad_.front(), alpha_rad_.back());
        const auto it = std::upper_bound(alpha_rad_.begin(), alpha_rad_.end(), a);
        const std::size_t hi = std::min<std::size_t>(
            std::max<std::ptrdiff_t>(it - alpha_rad_.begin(), 1), alpha_rad_.size() - 1);
        const std::size_t lo = hi - 1;
        const double w = (a - alpha_rad_[lo]) / (alpha_rad_[hi] - alpha_rad_[lo]);
        return y[lo] + w * (y[hi] - y[lo]);
    }

    std::vector<double> alpha_rad_;
    std::vector<double> cl_;
    std::vector<double> cd_;
};

} // namespace

AeroModel build_model(const PolarTable& table, double ka, SymmetryClass declared) {
    table.validate();
    if (table.coverage() != PolarCoverage::FullCircle)
        throw RangeError("build_model requires coverage [-180, 180] deg");
    if (!(ka > 0.0))
        throw ValidationError("build_model: ka must be > 0");

    auto interp = std::make_shared<const LinearPolar>(table);
    AeroMetadata meta;
    meta.name = table.name;
    meta.reynolds = table.reynolds;
    meta.mach = table.mach;
    return AeroModel([interp](double a) { return interp->lift(a); },
                     [interp](double a) { return interp->drag(a); }, ka, declared,
                     std::move(meta), 1e-6);
}

} // namespace trim
