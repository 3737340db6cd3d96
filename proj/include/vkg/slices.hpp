#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "vkg/generators.hpp"
#include "vkg/geometry.hpp"
#include "vkg/grid.hpp"

namespace vkg {

// Velocity moments stored per f-word g = Zhat_A f (all of |g|):
//   m0 = int |g|, minv = int |g| / v0, mw = int v0 |g|, mww = int v0^2 |g|,
//   mv_i = int v^i |g|, mwv_i = int v0 v^i |g|.
enum FMoment { kM0 = 0, kMinv = 1, kMw = 2, kMww = 3, kMv = 4 };
// Field data per word: Z_A phi, d_t Z_A phi, d_{x^i} Z_A phi at kPhiDx + i - 1.
enum PhiComponent { kPhi = 0, kPhiDt = 1, kPhiDx = 2 };

/// Which quantities a diagnostic record carries, and where.
struct DiagLayout {
  int n = 1;
  int order = 0;
  int balance_order = 0;
  std::vector<MultiIndex> words;     // every |A| <= order, sorted by (|A|, ids)
  std::vector<int> balance_words;    // word indices with |A| <= balance_order

  static DiagLayout make(int n, int order, int balance_order);

  int f_moment_count() const { return 4 + 2 * n; }
  int phi_count() const { return 2 + n; }
  std::size_t f_index(int word, int comp) const;
  std::size_t mv_index(int word, int i) const { return f_index(word, kMv + i - 1); }
  std::size_t mwv_index(int word, int i) const { return f_index(word, kMv + n + i - 1); }
  std::size_t phi_index(int word, int comp) const;
  /// Cumulative time integral of int (|h_A| + |grad phi| |Zhat_A f|) dv.
  std::size_t vbulk_index(int balance_slot) const;
  /// Cumulative time integral of h_A d_t Z_A phi.
  std::size_t kgbulk_index(int word) const;
  std::size_t quantity_count() const;

  /// f moments are interpolated linearly in t (positive weights), the rest cubically.
  bool interpolate_linearly(std::size_t q) const;
  std::string quantity_name(std::size_t q) const;
  int word_index(const MultiIndex& a) const;
  int balance_slot(int word) const;  // -1 when the word is not tracked
};

/// Per-x arrays of every layout quantity at one Cartesian time.
struct DiagRecord {
  double t = 0.0;
  std::vector<std::vector<double>> values;  // [quantity][x node]
};

/// Bounded record history with strictly increasing, uniformly spaced times.
class HistoryRing {
 public:
  explicit HistoryRing(std::size_t capacity) : capacity_(capacity) {}
  void push(DiagRecord r);
  std::size_t size() const { return records_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return records_.empty(); }
  const DiagRecord& operator[](std::size_t k) const { return records_[k]; }
  const DiagRecord& back() const { return records_.back(); }
  double t_first() const { return records_.front().t; }
  double t_last() const { return records_.back().t; }

 private:
  std::size_t capacity_;
  std::deque<DiagRecord> records_;
};

/// Selected quantities sampled on the nodes of a slice quadrature.
struct SliceSample {
  double tau = 1.0;
  SliceQuadrature quad;
  std::vector<std::size_t> quantities;
  std::vector<std::vector<double>> values;  // [selected k][node]

  /// Values of layout quantity q; throws if q was not selected.
  const std::vector<double>& get(std::size_t q) const;
  bool has(std::size_t q) const;
};

/// Spatial stencil of a slice node in the x grid (linear in n = 1, bilinear in n = 2).
struct NodeStencil {
  std::array<std::size_t, 4> index{};
  std::array<double, 4> weight{};
  int size = 0;
};
NodeStencil node_stencil(const PhaseGrid& g, std::span<const double> y);

/// Interpolate every selected quantity of the history onto the slice. Fails if
/// any node time lies outside [t_first, t_last] of the history.
SliceSample extract_slice(const HistoryRing& history, const SliceQuadrature& q, const PhaseGrid& g,
                          const DiagLayout& layout, const std::vector<std::size_t>& selector);

/// Incremental slice builder: nodes are filled as soon as the history ring
/// brackets their time with enough records for cubic interpolation.
class SliceAccumulator {
 public:
  SliceAccumulator(SliceQuadrature q, const PhaseGrid& g, const DiagLayout& layout);
  void absorb(const HistoryRing& history);
  void finish(const HistoryRing& history);
  bool complete() const { return next_ == order_.size(); }
  double t_needed() const { return quad_.t_max(); }
  const SliceQuadrature& quadrature() const { return quad_; }
  SliceSample take();

 private:
  void fill(const HistoryRing& history, std::size_t node);

  SliceQuadrature quad_;
  const PhaseGrid* grid_;
  const DiagLayout* layout_;
  std::vector<std::size_t> order_;  // nodes sorted by t
  std::size_t next_ = 0;
  std::vector<NodeStencil> stencils_;
  SliceSample sample_;
};

/// Slice quadrature aligned with the spatial grid for n = 1 (nodes on grid points).
SliceQuadrature grid_slice_quadrature(double tau, const PhaseGrid& g, double rmax, int resolution, int angular);

}  // namespace vkg
