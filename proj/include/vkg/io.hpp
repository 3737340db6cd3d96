#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vkg/analysis.hpp"
#include "vkg/solver.hpp"

namespace vkg {

/// SHA-1 of "blob <size>\0" + content, as git computes object ids.
std::string git_blob_hash(const std::string& content);

/// Shortest round-trip decimal form of a double.
std::string fmt(double x);

struct RawGrid {
  std::vector<std::uint64_t> dims;
  std::vector<double> data;
};
/// "VKG1", u32 rank, u64 dims[rank], "f64\0", then little-endian row-major doubles.
std::string encode_raw_grid(const RawGrid& g);
RawGrid decode_raw_grid(const std::string& bytes);

std::string series_csv(const std::vector<SeriesRow>& rows);
std::string slice_csv(const SliceSample& s, const DiagLayout& layout);
/// Rows (tau, kind, order, word, value).
std::string energies_csv(const std::vector<EnergyReport>& reports, int n);
std::string inequalities_csv(const RunAnalysis& a);
std::string balances_csv(const std::vector<BalanceRecord>& rows);
std::string decay_fit_csv(const DecayFit& fit);
std::string summary_json(const RunArtifacts& a, const RunAnalysis& an);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};
/// Self-contained SVG line plot; nonpositive points are dropped on log axes.
std::string svg_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                     const std::vector<PlotSeries>& series, bool logx, bool logy);

/// Writes files into a directory, recording content hashes for the manifest.
class OutputWriter {
 public:
  explicit OutputWriter(std::string dir);
  void write(const std::string& name, const std::string& content);
  /// manifest.json, written last; timings are reported but not hashed.
  void write_manifest(const SimConfig& c, const std::map<std::string, double>& timings,
                      const std::vector<MonitorResult>& monitors);
  const std::string& dir() const { return dir_; }
  const std::map<std::string, std::string>& hashes() const { return hashes_; }

 private:
  std::string dir_;
  std::map<std::string, std::string> hashes_;
  std::map<std::string, std::size_t> sizes_;
};

/// All run outputs (CSV, JSON, optional SVG and raw dumps), then the manifest.
void write_run_outputs(OutputWriter& w, const RunArtifacts& a, const RunAnalysis& an,
                       const std::map<std::string, double>& timings);

}  // namespace vkg
