#pragma once

#include <random>

#include "jointkit/incidence.hpp"
#include "jointkit/poly.hpp"

namespace jointkit {

/// Seeded generator; all sampling goes through explicit helpers so runs are
/// reproducible across platforms.
class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 below(u64 n) { return eng_() % n; } // n > 0
    u64 field_value(const PrimeField& f) { return below(f.modulus()); }
    u64 nonzero_field_value(const PrimeField& f) { return 1 + below(f.modulus() - 1); }
    bool coin() { return (eng_() & 1) != 0; }
    u64 raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

Point random_point(const PrimeField& f, std::size_t d, Rng& rng);
Direction random_direction(const PrimeField& f, std::size_t d, Rng& rng);
Line random_line(const PrimeField& f, std::size_t d, Rng& rng);

/// Random nonzero polynomial with total degree exactly <= max_degree (at
/// least one term of degree max_degree when force_top).
SparsePoly random_poly(const PrimeField& f, std::size_t d, u64 max_degree, std::size_t terms,
                       Rng& rng, bool force_top = false);

/// Random invertible affine map.
AffineMap random_affine(const PrimeField& f, std::size_t d, Rng& rng);

LineSystem generate_axes(const PrimeField& f, std::size_t d);

/// Every axis-parallel line of F_p^d: d p^{d-1} lines; every point is a joint.
LineSystem generate_grid(const PrimeField& f, std::size_t d);

/// n distinct random lines.
LineSystem generate_random(const PrimeField& f, std::size_t d, u64 n, u64 seed);

/// n distinct random lines arranged so that `planted` points are joints:
/// bundles of d independent lines are planted first, then filler lines.
LineSystem generate_random_with_joints(const PrimeField& f, std::size_t d, u64 n, u64 planted,
                                       u64 seed);

/// d labeled families of the given sizes with `planted` multijoints. When
/// `clean` is set, no point of the configuration carries two lines of the
/// same family (rejection-sampled), so multijoint counting is unambiguous.
LineSystem generate_families(const PrimeField& f, std::size_t d, const std::vector<u64>& sizes,
                             u64 planted, u64 seed, bool clean = false);

} // namespace jointkit
