#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trim/aero_model.hpp"

namespace trim {

/// Angle-of-attack coverage classes a table can declare.
enum class PolarCoverage { ZeroTo90, ZeroTo180, FullCircle };

/// Tabulated airfoil polar. Angles stay in degrees here; conversion to
/// radians happens once when an AeroModel is built.
struct PolarTable {
    std::vector<double> alpha_deg; // strictly increasing
    std::vector<double> cl;
    std::vector<double> cd;        // > 0
    std::optional<double> reynolds;
    std::optional<double> mach;
    std::string name;

    std::size_t size() const { return alpha_deg.size(); }

    /// Throws ValidationError on broken invariants (sizes, ordering, cd).
    void validate() const;

    /// One of the supported coverage classes, or empty for other ranges.
    std::optional<PolarCoverage> coverage() const;
};

/// CSV with header `alpha_deg,cl,cd` and optional `#` lines; the keys
/// `# name=`, `# Re=`, `# M=` populate the metadata, other `#` lines are
/// comments. Rows are sorted by alpha; duplicate alpha is rejected.
PolarTable parse_polar_csv(std::istream& in);
PolarTable parse_polar_csv(const std::string& text);

/// Reads and parses a polar file; ConfigError if the file cannot be opened.
PolarTable load_polar_csv(const std::string& path);

/// Emits the same CSV dialect at full precision (round-trips numerically).
std::string write_polar_csv(const PolarTable& table);

/// Mirrors a [0, 180] table onto [-180, 180] by the symmetric-shape
/// identities c_D(-a) = c_D(a), c_L(-a) = -c_L(a).
PolarTable extend_symmetric(const PolarTable& table);

/// Extends a [0, 90] table onto [-180, 180] by pi-periodicity composed
/// with the mirror identities (bisymmetric shape).
PolarTable extend_bisymmetric(const PolarTable& table);

/// Piecewise-linear interpolated model over a [-180, 180] table with
/// periodic continuation at +-180. The declared class is verified at the
/// tabulated-data tolerance (1e-6) before the model is returned.
AeroModel build_model(const PolarTable& table, double ka, SymmetryClass declared);

} // namespace trim
