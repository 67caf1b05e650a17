#pragma once

// Point blow-ups, reduction of singularities with a full tree record,
// saddle-node tangency against the exceptional divisor, verdicts, and
// comparison with the embedded resolution of a curve.

#include <set>
#include <string>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

struct DepthExceeded : std::runtime_error {
  explicit DepthExceeded(int d)
      : std::runtime_error("blow-up depth limit " + std::to_string(d) +
                           " exceeded"),
        max_depth(d) {}
  int max_depth;
};

struct Dicritical : std::runtime_error {
  Dicritical() : std::runtime_error("the foliation is dicritical") {}
};

struct Truncated : std::runtime_error {
  Truncated()
      : std::runtime_error("no verdict: the reduction tree is truncated") {}
};

struct BlowupResult {
  OneForm chart1;  // (x, t): y = t x, strict transform
  OneForm chart2;  // (s, y): x = s y, strict transform
  long exceptional_exponent;
  bool dicritical;
};

/// Both charts of the blow-up at the origin; strict transforms are the
/// total transforms divided by the exact exceptional power.
BlowupResult blowup(const OneForm& w);

enum class Tangency { Tangent, Transverse };

struct SingularityRecord {
  std::string chart_path;  // blow-up centers leading here, e.g. "/C1(t=0)"
  std::string point;       // coordinate on the last divisor, or a cluster modulus
  bool cluster = false;
  SingularityClass cls;
  bool on_corner = false;
  std::optional<Tangency> saddle_node_tangency;  // iff cls is SaddleNode
};

struct ReductionTree {
  std::vector<std::string> centers;        // canonical (sorted) center paths
  std::vector<SingularityRecord> leaves;   // sorted by (chart_path, point)
  long blowup_count = 0;
  bool dicritical = false;                 // tree truncated at that center
};

ReductionTree reduce(const OneForm& w, int max_depth = 30);

struct TreeVerdict {
  bool second_type;
  bool generalized_curve;
};

/// Throws Truncated when the tree was cut at a dicritical center.
TreeVerdict verdict(const ReductionTree& tree);

/// Minimal embedded resolution centers of the curve f = 0 (blow up while the
/// strict transform is singular, tangent to the divisor, or on a corner).
std::vector<std::string> curve_resolution_centers(const Poly2& f,
                                                  int max_depth = 30);

/// The foliation and the curve have the same set of blow-up centers.
bool same_reduction(const OneForm& w, const Poly2& f, int max_depth = 30);

std::string tree_dot(const ReductionTree& tree);
std::string tree_json(const ReductionTree& tree);

}  // namespace fol
