#pragma once

#include <string>
#include <vector>

#include "pjacobi/jacobi.hpp"
#include "pjacobi/quasimomentum.hpp"

namespace pjacobi {

enum class Relation { Less, Greater, LessEqual, GreaterEqual };

/// "<", ">", "<=" or ">=".
const char* relation_symbol(Relation r);

/// One inequality, lhs `relation` rhs. margin is the signed slack (positive when
/// the inequality holds). Records that cannot be evaluated carry NaN sides.
struct BoundRecord {
    std::string name;
    Relation relation = Relation::Greater;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool satisfied = false;
    bool degenerate = false;  ///< every gap closed
    std::string note;
};

/// Fills margin and satisfied: slack > -1e-10 * max(1, |lhs|, |rhs|).
BoundRecord make_record(std::string name, double lhs, Relation rel, double rhs, bool degenerate = false);

struct BoundsSummary {
    int q = 0;
    double c = 0.0;
    double A = 0.0;
    double h_plus = 0.0;
    double Q0 = 0.0;
    double shift = 0.0;
    double trace_L = 0.0;   ///< normalised operator
    double trace_L2 = 0.0;  ///< normalised operator
    double input_trace_L = 0.0;
    double input_trace_L2 = 0.0;
    double b_tilde = 0.0;
    double M = 0.0;
    double b_plus = 0.0;
    int open_gaps = 0;
};

struct BoundsReport {
    BoundsSummary summary;
    std::vector<BoundRecord> records;
    bool degenerate = false;

    /// True when every evaluated, non-degenerate record is satisfied.
    bool all_satisfied() const;
    const BoundRecord& at(const std::string& name) const;
};

BoundsReport certify(const PeriodicJacobi& J, const SpectrumOptions& opts = {});
/// Same, reusing a model built from `input`.
BoundsReport certify(const PeriodicJacobi& input, const QuasimomentumModel& M);

/// Root of x^2 (1/2 + ln(x/2)) = 4 on [2, 4].
double harper_lower_bound();

struct HarperBoundResult {
    int p = 0;
    int q = 0;
    double theta = 0.0;
    double c = 0.0;
    double lower_bound = 0.0;
    double trace_L2 = 0.0;  ///< of the unshifted operator, 4q
    bool holds = false;     ///< c > lower_bound
};

/// Requires q >= 3 and q not dividing 2p, so that Tr L^2 = 4q.
HarperBoundResult harper_bound_demo(int p, int q, double theta = 0.0);

}  // namespace pjacobi
