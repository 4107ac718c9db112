#pragma once

#include "jointkit/poly.hpp"

namespace jointkit {

/// Result of a (P,l)-multiplicity computation, including the derived data the
/// well-definedness argument is about.
struct MultiplicityReport {
    u64 value = 0;
    u64 lowest_degree = 0;                      // minimal |alpha| with f_alpha != 0
    std::vector<std::vector<u32>> lowest_tuples; // all alpha attaining it
    AffineMap transform_used;
    u64 p_t = 0;
};

/// Per-line work shared by every point of the line: one pullback into axis
/// coordinates, one axis decomposition, the set of lowest alpha.
class LineRestriction {
public:
    /// Uses the deterministic axis transform of the line.
    LineRestriction(const SparsePoly& q, const Line& l);
    /// Any transform sending l to the x_d-axis (validated).
    LineRestriction(const SparsePoly& q, const Line& l, const AffineMap& t);

    /// m_Q(P,l) for the point with parameter value t(P) = (0,...,0,p_t).
    u64 value_at_param(u64 p_t) const;
    u64 value_at(const Point& p) const;

    u64 lowest_degree() const { return lowest_degree_; }
    const std::vector<std::vector<u32>>& lowest_tuples() const { return lowest_tuples_; }
    const AffineMap& transform() const { return transform_; }
    u64 param_of(const Point& p) const;

private:
    void build(const SparsePoly& q);

    Line line_;
    AffineMap transform_;
    std::map<std::vector<u32>, UniPoly> decomposition_;
    u64 lowest_degree_ = 0;
    std::vector<std::vector<u32>> lowest_tuples_;
};

/// The (P,l)-multiplicity of Q: minimal root multiplicity of p_T across the
/// lowest alpha of the axis decomposition. Finite even when Q vanishes on l.
MultiplicityReport pl_multiplicity(const SparsePoly& q, const Point& p, const Line& l);

/// Same, but under a caller-chosen transform sending l to the x_d-axis.
MultiplicityReport pl_multiplicity_with(const SparsePoly& q, const Point& p, const Line& l,
                                        const AffineMap& t);

/// Sum of m_Q(P,l) over all p points of l. Always <= deg Q; violation throws.
u64 bezout_sum(const SparsePoly& q, const Line& l);

enum class JointClass { Ordinary, Special };

/// Ordinary iff the lowest homogeneous term of the frame-pulled-back
/// polynomial is independent of the line's coordinate.
JointClass classify_joint(const SparsePoly& q, const Point& p, const Line& l);

/// Same under a caller-chosen frame with t(P) = 0 and t(l) = x_d-axis.
JointClass classify_joint_with(const SparsePoly& q, const Point& p, const Line& l,
                               const AffineMap& t);

/// The monomial lower bound route: expand (T^{-1})^*Q around (0,...,0,p_t) and
/// return the largest exponent of `var` over the minimal-total-degree terms.
/// Each such exponent individually lower-bounds m_Q(P,l) for the line sent to
/// the `var`-th axis.
u64 expansion_lower_bound(const SparsePoly& pulled_back, u64 p_t, std::size_t var);

/// True iff t maps l onto the x_d-axis (setwise).
bool sends_line_to_axis(const AffineMap& t, const Line& l);

} // namespace jointkit
