#pragma once

#include <string>

#include "jointkit/incidence.hpp"
#include "jointkit/multiplicity.hpp"

namespace jointkit {

/// C(n, k) in exact 64-bit arithmetic; throws on overflow.
u64 binomial(u64 n, u64 k);

/// Smallest D such that a degree-D polynomial in d variables has more
/// coefficients than `count`, i.e. C(D+d, d) > count.
u64 min_degree_for(u64 count, std::size_t d);

/// All monomials of degree <= D in d variables in the canonical graded order,
/// with O(1) index lookup and per-variable successor tables.
class MonomialTable {
public:
    MonomialTable(std::size_t d, u64 max_degree);

    std::size_t d() const { return d_; }
    u64 max_degree() const { return max_deg_; }
    std::size_t size() const { return mons_.size(); }
    const Monomial& at(std::size_t i) const { return mons_[i]; }
    std::size_t degree_offset(u64 t) const { return offsets_[t]; } // first index of degree t

    std::size_t index_of(const std::vector<u32>& exps) const;
    bool in_range(const std::vector<u32>& exps) const;
    /// Index of mons[i] * x_var; i must have degree < max_degree.
    std::size_t shifted(std::size_t i, std::size_t var) const { return shift_[i * d_ + var]; }

private:
    std::size_t d_;
    u64 max_deg_;
    std::vector<Monomial> mons_;
    std::vector<std::size_t> offsets_;
    std::vector<u32> key_to_index_;
    std::vector<u32> shift_;
    std::size_t key_of(const std::vector<u32>& exps) const;
};

/// Pullback of q under t computed through the dense monomial-image engine;
/// equals poly.hpp's pullback but scales to certificate-sized inputs.
SparsePoly pullback_dense(const SparsePoly& q, const AffineMap& t, const MonomialTable& table);

struct ConstraintRow {
    std::vector<std::pair<u32, u64>> entries; // (monomial index, value), sparse
    std::string tag;                          // which point / beta generated it
};

/// Homogeneous linear forms over the coefficient space of degree-<=D
/// polynomials in d variables.
struct ConstraintSystem {
    PrimeField field;
    std::size_t d;
    u64 degree_bound;
    std::size_t unknowns; // C(D+d, d)
    std::vector<ConstraintRow> rows;
};

struct Certificate {
    SparsePoly q;
    ConstraintSystem system;
};

ConstraintSystem vanishing_constraints(const PrimeField& field, std::size_t d,
                                       const std::vector<Point>& points, u64 degree_bound);

struct PointFrame {
    Point point;
    AffineMap transform; // sends point to the origin
};

/// Per point and per beta in the box prod [0, bounds_i], the coefficient of
/// x^beta in the pulled-back generic polynomial, as a row. Throws
/// DegreeTooSmall if the coefficient space is not larger than the row count.
ConstraintSystem box_kill_constraints(const std::vector<PointFrame>& frames,
                                      const std::vector<u64>& bounds, u64 degree_bound);

/// Exact comparison against the full-strength threshold with the 100^j growth
/// factor: beta^(d-1) (prod r)^(d-2) <= (100^j B prod_{k != j} r_k)^(d-1),
/// evaluated in unbounded integers. j is 1-based; all r_k must be >= 1.
bool threshold_compare(u64 beta, std::size_t j, u64 b, const std::vector<u64>& r);

struct ThresholdOptions {
    u64 b = 1;      // global threshold multiplier
    u64 floor = 1;  // lower clamp on every per-axis limit
    u64 growth = 1; // per-axis growth base; 100 restores full strength
    u64 row_budget = 2000;
};

/// Largest beta killed on axis j (1-based): max(floor, the threshold bound).
/// Throws InfeasibleThresholds when it exceeds the row budget.
u64 axis_kill_limit(std::size_t j, const std::vector<u64>& r, const ThresholdOptions& opt);

struct KillBox {
    Point point;
    AffineMap transform;
    std::vector<u64> limits; // per-axis inclusive bounds
    u64 row_count;           // prod (limits_i + 1)
};

KillBox make_kill_box(const JointRecord& record, const ThresholdOptions& opt);

/// Weighted-threshold constraint system over the given joint records, using
/// each record's flag frame. Reports row counts per point through the boxes.
ConstraintSystem weighted_kill_constraints(const std::vector<JointRecord>& records,
                                           const ThresholdOptions& opt, u64 degree_bound,
                                           std::vector<KillBox>* boxes_out = nullptr);

/// Nonzero Q of degree <= D satisfying every row; deterministic. Every
/// certificate is re-substituted into its own system before returning.
Certificate solve_certificate(ConstraintSystem cs);

struct TraceCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct PointVerdict {
    Vec coords;
    std::string note;
};

struct ProofTrace {
    std::string theorem;
    u64 degree_bound = 0;
    i64 certificate_degree = -1;
    u64 joint_count = 0;
    u64 line_count = 0;
    std::vector<TraceCheck> checks;
    std::vector<PointVerdict> verdicts;
    std::vector<std::pair<std::string, u64>> tallies; // per-line / per-type counts

    bool passed() const;
    void require(const std::string& name, bool ok, const std::string& detail = "");
};

/// Executable run of the joints argument: vanishing certificate, ordinary /
/// special classification, per-line special bound, final count.
ProofTrace joints_proof_trace(const LineSystem& l);

/// Executable run of the multijoints argument: box-kill certificate, type
/// extraction with the monomial lower bound, pigeonhole, final chain.
ProofTrace multijoints_proof_trace(const LineSystem& l);

struct CarberyPointReport {
    Vec coords;
    u64 joint_mult = 0;       // M(P)
    std::vector<u64> minima;  // r_j
    std::vector<u64> limits;  // kill-box limits
    u64 sum_m = 0;            // sum over incident entries of m_Q(P, l_i)
    double ratio = 0.0;       // sum_m / (B M^{1/(d-1)})
};

struct CarberyAudit {
    ProofTrace trace;
    ThresholdOptions options;
    std::vector<CarberyPointReport> points;
    double global_ratio = 0.0; // sum_P M^{1/(d-1)} / N^{d/(d-1)}
    u64 total_multiplicity_sum = 0;
    u64 degree_cap = 0; // N * deg Q
};

/// Weighted certificate audit: hard-checks kill-box emptiness and the final
/// Bezout chain; the key per-point estimate is reported as a ratio, not
/// asserted.
CarberyAudit carbery_audit(const LineSystem& l, const ThresholdOptions& opt);

} // namespace jointkit
