#pragma once

#include <string>
#include <vector>

#include "lrising/analysis.hpp"
#include "lrising/dynamics.hpp"
#include "lrising/ensembles.hpp"
#include "lrising/model.hpp"
#include "lrising/montecarlo.hpp"

namespace lrising::io {

// Shortest round-trip decimal form; all CSV/JSON numbers go through this
// so identical runs produce byte-identical files.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

inline constexpr const char* schema_comment = "# schema-version: 1\n";

// Coupling matrices: row per site, comma-separated entries, header
// comments carrying L, gamma and provenance. The JSON sidecar repeats the
// metadata for tooling.
std::string couplings_to_csv(const CouplingMatrix& cm);
CouplingMatrix couplings_from_csv(const std::string& text);
std::string couplings_metadata_json(const CouplingMatrix& cm, double j_scale);

// Observable time series: one row per time, columns per observable.
std::string series_to_csv(const ObservableSeries& s);
// One correlation matrix (L x L) at a given time.
std::string correlation_to_csv(const std::vector<double>& corr, int L, double time);

// Monte Carlo estimates; spec column order, |m| appended after seed.
std::string mc_csv_header();
std::string mc_csv_row(const McEstimate& est, const BinderValue& u4);

// Ensemble records keyed by (eps, g, L, ensemble).
std::string ensemble_csv_header();
std::string ensemble_csv_row(const EnsembleResult& r);

// Phase diagram grid: JSON (axes + cell arrays) and per-observable CSV.
std::string grid_to_json(const PhaseDiagramGrid& grid);
std::string grid_to_csv(const PhaseDiagramGrid& grid, const std::string& observable);
std::string critical_line_csv(const std::vector<CriticalPoint>& line);

// Binder curves (L, control, u4, err, source).
std::string binder_csv_header();
std::string binder_csv_rows(const BinderCurve& curve);

// Generic CSV reader: '#' comment lines skipped, first remaining line is
// the header. Non-numeric cells parse as NaN.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    int column(const std::string& name) const;  // -1 if absent
};
Table parse_table(const std::string& text);

}  // namespace lrising::io
