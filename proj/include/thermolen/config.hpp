#pragma once

#include "thermolen/kernel.hpp"
#include "thermolen/params.hpp"
#include "thermolen/protocol.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace thermolen {

enum class SweepVariable { QStar, Omega1, Tau };

struct SweepSpec {
    SweepVariable variable = SweepVariable::QStar;
    double from = 0.0;
    double to = 0.0;
    int steps = 2;
};

enum class OutputQuantity { Sigma, Bounds, Fidelity, TraceDistance, UpperBound };

/// CSV columns. Names are part of the output contract and never change.
enum class Column {
    QStar,
    Omega1,
    Tau,
    Sigma,
    SBures,
    LeadingBures,
    BuresDistanceSq,
    STrace,
    UpperEigenvalue,
    UpperPopulation,
    Fidelity,
};

const char* column_name(Column c);

struct RunConfig {
    OscillatorParams params;
    Protocol protocol;
    GridSpec grid;
    std::optional<SweepSpec> sweep;
    std::vector<OutputQuantity> outputs = {OutputQuantity::Sigma, OutputQuantity::Bounds,
                                           OutputQuantity::Fidelity};
    std::string out_path = "out.csv";
    /// Presets pin their column layout; user configs derive it from outputs.
    std::optional<std::vector<Column>> columns;
};

/// Parse the flat dotted key=value format ('#' starts a comment). Throws
/// ConfigError with the offending key in the message.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Resolve the CSV column layout and reject outputs the sweep cannot
/// provide (trace distance and populations need a concrete protocol).
std::vector<Column> plan_columns(const RunConfig& config);

/// Entropy production and Bures bounds against Q* (no protocol integrated).
RunConfig figure1_config();

/// Sudden-switch frequency sweep comparing the trace-distance bound with
/// the Bures one.
RunConfig figure2_config();

} // namespace thermolen
