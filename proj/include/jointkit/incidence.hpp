#pragma once

#include <optional>

#include "jointkit/geometry.hpp"

namespace jointkit {

struct LineEntry {
    Line line;
    u64 mult = 1;
    std::optional<u32> family; // 1..d when present
};

/// A multiset of lines, optionally split into d labeled families. Entries are
/// kept as given; counts are multiplicity-weighted.
class LineSystem {
public:
    LineSystem(const PrimeField& field, std::size_t d, std::vector<LineEntry> entries);

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return d_; }
    const std::vector<LineEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    u64 total_multiplicity() const; // N
    bool has_families() const { return has_families_; }
    u64 family_size(u32 i) const;   // N_i, 1-based

    /// Indices of entries whose line passes through p.
    std::vector<std::size_t> incident_entries(const Point& p) const;
    u64 incident_multiplicity(const Point& p) const;

private:
    PrimeField field_;
    std::size_t d_;
    std::vector<LineEntry> entries_;
    bool has_families_ = false;
};

/// Nested subspaces V_1 of dim 0 up to V_d of dim d-1 at a joint, together
/// with the non-parallel counts witnessing the flag's defining bounds.
struct Flag {
    Point anchor;
    std::vector<Subspace> subspaces;  // V_1..V_d
    std::vector<u64> witness_counts;  // |L_j(P)| for j = 1..d
};

/// Everything the weighted certificate needs about one joint.
struct JointRecord {
    Point point;
    u64 joint_mult = 0;           // M(P)
    std::vector<u64> minima;      // r_1 >= ... >= r_d
    Flag flag;
    std::vector<Line> frame_lines; // transversal lines s_{1,P}..s_{d,P}
};

/// All points where d incident lines have linearly independent directions.
/// A repeated line contributes one direction to the independence test.
std::vector<Point> find_joints(const LineSystem& l);

/// Number of ordered d-tuples of distinct entries (multiplicity-weighted)
/// whose directions are linearly independent at p.
u64 joint_multiplicity(const LineSystem& l, const Point& p);

/// Family-labeled analogue: one entry per family, in family order.
u64 multijoint_multiplicity(const LineSystem& l, const Point& p);

/// (r_1,...,r_d): r_j minimizes the count of incident lines not parallel to a
/// (j-1)-dimensional subspace. The minimum is searched over spans of incident
/// directions padded with standard basis vectors, which always contains an
/// optimizer.
std::vector<u64> successive_minima(const LineSystem& l, const Point& p);

/// The downward-induction flag: V_d maximizes the parallel count among
/// hyperplane candidates, then each V_j maximizes it among (j-1)-dimensional
/// subspaces of V_{j+1}. Ties break to the lexicographically least echelon
/// basis. Requires a joint at p.
Flag build_flag(const LineSystem& l, const Point& p);

/// Transversal lines through the anchor whose first j-1 directions span V_j.
std::vector<Line> flag_frame_lines(const Flag& flag);

JointRecord analyze_point(const LineSystem& l, const Point& p);

/// The replication that reduces the family-labeled statement to the plain
/// multiset one: each family-i entry is repeated prod_{j != i} N_j times.
LineSystem reduction_system(const LineSystem& l);

/// Line-line intersection point, if the two lines meet in exactly one point.
std::optional<Point> intersect_lines(const Line& a, const Line& b);

/// All k-dimensional subspaces of the span of the given basis rows,
/// enumerated through reduced-echelon coordinate matrices.
std::vector<Subspace> subspaces_within(const PrimeField& field, const std::vector<Vec>& basis,
                                       std::size_t k);

} // namespace jointkit
