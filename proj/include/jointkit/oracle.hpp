#pragma once

#include <optional>

#include "jointkit/incidence.hpp"
#include "jointkit/multiplicity.hpp"

namespace jointkit {
namespace oracle {

/// Exhaustive j-th minimum: enumerates every (j-1)-dimensional subspace of
/// F_p^d as its full vector set. Guarded to p <= 5, d <= 4.
u64 oracle_minima(const LineSystem& l, const Point& p, std::size_t j);

/// Classical intersection multiplicity via direct restriction of Q to the
/// line's parameterization; nullopt when the restriction vanishes identically.
std::optional<u64> oracle_classical_multiplicity(const SparsePoly& q, const Point& p,
                                                 const Line& l);

/// Literal M(P): enumerates ordered d-tuples of distinct unit entries with an
/// independent-direction test. Guarded by the incident unit-entry bound.
u64 oracle_joint_tuples(const LineSystem& l, const Point& p, u64 bound = 64);

/// Literal mu(P): one unit entry per family, in family order.
u64 oracle_multijoint_tuples(const LineSystem& l, const Point& p, u64 bound = 64);

/// Computes m_Q(P,l) under k independently randomized valid axis transforms
/// and demands agreement; returns the common value.
u64 oracle_invariance(const SparsePoly& q, const Point& p, const Line& l, std::size_t k,
                      u64 seed);

/// All vectors of the span of the given rows (every coefficient combination).
std::vector<Vec> space_vectors(const PrimeField& field, std::size_t d,
                               const std::vector<Vec>& basis_rows);

/// All k-dimensional subspaces of the given space, each as its sorted full
/// vector set. The space is given by its member vectors.
std::vector<std::vector<Vec>> subspace_sets(const PrimeField& field, std::size_t d,
                                            const std::vector<Vec>& space, std::size_t k);

/// Multiplicity-weighted count of incident entries whose direction lies in the
/// member set.
u64 parallel_count_in_set(const LineSystem& l, const Point& p, const std::vector<Vec>& members);
u64 nonparallel_count_in_set(const LineSystem& l, const Point& p,
                             const std::vector<Vec>& members);

/// A seeded random affine map sending l to the x_d-axis.
AffineMap random_axis_transform(const Line& l, u64 seed);

/// A seeded random affine map sending p to the origin and l to the x_d-axis.
AffineMap random_pointed_axis_transform(const Point& p, const Line& l, u64 seed);

} // namespace oracle
} // namespace jointkit
