#pragma once

#include <map>
#include <vector>

#include "jointkit/geometry.hpp"

namespace jointkit {

/// Exponent vector of a monomial. Arithmetic is overflow-checked.
struct Monomial {
    std::vector<u32> exps;

    explicit Monomial(std::size_t d) : exps(d, 0) {}
    explicit Monomial(std::vector<u32> e) : exps(std::move(e)) {}

    std::size_t dim() const { return exps.size(); }
    u64 total_degree() const {
        u64 s = 0;
        for (u32 e : exps) s += e;
        return s;
    }
    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Term order: by total degree, then lexicographically descending exponents,
/// so x_1 sorts before x_2 within a degree block.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        u64 da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.exps > b.exps;
    }
};

/// Univariate polynomial over F_p, dense coefficients, index = degree.
class UniPoly {
public:
    UniPoly(const PrimeField& field, Vec coeffs);
    static UniPoly zero(const PrimeField& field) { return UniPoly(field, {}); }
    static UniPoly constant(const PrimeField& field, u64 c) { return UniPoly(field, {c}); }

    const PrimeField& field() const { return field_; }
    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    u64 eval(u64 x) const;

    UniPoly& add_term(u64 degree, u64 coeff);

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

private:
    PrimeField field_;
    Vec c_;
    void trim();
};

/// Largest m with (x-a)^m dividing f; 0 when f(a) != 0. f must be nonzero.
u64 root_multiplicity(const UniPoly& f, u64 a);

/// Sparse multivariate polynomial over F_p. Only nonzero coefficients are
/// stored; the zero polynomial is the empty map.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, u64, MonomialLess>;

    SparsePoly(const PrimeField& field, std::size_t d) : field_(field), d_(d) {}

    static SparsePoly constant(const PrimeField& field, std::size_t d, u64 c);
    static SparsePoly variable(const PrimeField& field, std::size_t d, std::size_t i,
                               u32 power = 1);

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return d_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    i64 total_degree() const;
    u64 coeff(const Monomial& m) const;

    void add_term(const Monomial& m, u64 c);
    void set_term(const Monomial& m, u64 c);

    u64 eval(const Point& p) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(u64 c) const;

    bool operator==(const SparsePoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

private:
    PrimeField field_;
    std::size_t d_;
    TermMap terms_;
};

/// An affine-linear coordinate form c0 + sum_i c[i] x_i.
struct LinearForm {
    Vec coeffs;
    u64 constant = 0;
};

/// Substitute x_i -> forms[i] into q and expand.
SparsePoly substitute(const SparsePoly& q, const std::vector<LinearForm>& forms);

/// Q composed with T^{-1}; degree is preserved.
SparsePoly pullback(const SparsePoly& q, const AffineMap& t);

/// result(x) = Q(x + P), expanded by substitution (no derivatives anywhere).
SparsePoly shift_to_point(const SparsePoly& q, const Point& p);

/// Q as sum over (d-1)-indices alpha of x^(alpha,0) f_alpha(x_d). Only nonzero
/// f_alpha appear; reassembling the map reproduces Q exactly.
std::map<std::vector<u32>, UniPoly> axis_decomposition(const SparsePoly& q);

/// Sum of all terms of minimal total degree. Q must be nonzero.
SparsePoly lowest_homogeneous(const SparsePoly& q);

} // namespace jointkit
