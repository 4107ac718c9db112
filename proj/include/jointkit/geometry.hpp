#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "jointkit/matrix.hpp"

namespace jointkit {

/// A point of F_p^d.
struct Point {
    PrimeField field;
    Vec coords;

    Point(const PrimeField& f, Vec c) : field(f), coords(std::move(c)) {
        for (u64& x : coords) x = field.reduce(x);
    }

    std::size_t dim() const { return coords.size(); }

    bool operator==(const Point& o) const {
        return field == o.field && coords == o.coords;
    }
    bool operator<(const Point& o) const { return coords < o.coords; }
};

/// A projective direction: nonzero vector normalized so its first nonzero
/// coordinate equals 1. The index of that coordinate is the pivot.
class Direction {
public:
    Direction(const PrimeField& field, const Vec& raw);

    const Vec& vec() const { return v_; }
    std::size_t pivot() const { return pivot_; }
    std::size_t dim() const { return v_.size(); }
    const PrimeField& field() const { return field_; }

    bool operator==(const Direction& o) const { return v_ == o.v_; }
    bool operator!=(const Direction& o) const { return v_ != o.v_; }
    bool operator<(const Direction& o) const { return v_ < o.v_; }

private:
    PrimeField field_;
    Vec v_;
    std::size_t pivot_;
};

/// A line in canonical form: base point with coordinate 0 at the direction's
/// pivot. Two equal point sets compare equal as values.
class Line {
public:
    Line(Point base, Direction dir);

    const Point& base() const { return base_; }
    const Direction& dir() const { return dir_; }
    std::size_t dim() const { return dir_.dim(); }
    const PrimeField& field() const { return dir_.field(); }

    /// base + t * dir.
    Point at(u64 t) const;

    bool operator==(const Line& o) const { return base_ == o.base_ && dir_ == o.dir_; }
    bool operator!=(const Line& o) const { return !(*this == o); }
    bool operator<(const Line& o) const {
        if (base_.coords != o.base_.coords) return base_.coords < o.base_.coords;
        return dir_ < o.dir_;
    }

private:
    Point base_;
    Direction dir_;
};

/// Invertible affine map x -> A x + b.
class AffineMap {
public:
    AffineMap(Matrix linear, Vec shift);

    const Matrix& linear() const { return linear_; }
    const Vec& shift() const { return shift_; }
    std::size_t dim() const { return shift_.size(); }
    const PrimeField& field() const { return linear_.field(); }

    Vec apply(const Vec& x) const;
    Point apply(const Point& p) const { return Point(p.field, apply(p.coords)); }
    AffineMap inverse() const;
    /// this after other: (this o other)(x) = this(other(x)).
    AffineMap compose(const AffineMap& other) const;

    static AffineMap identity(const PrimeField& field, std::size_t d);

private:
    Matrix linear_;
    Vec shift_;
};

/// A linear subspace, stored as the unique reduced row echelon basis.
class Subspace {
public:
    /// Span of the given vectors (rows).
    Subspace(const PrimeField& field, std::size_t ambient_dim, const std::vector<Vec>& spanning);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Row-major flattening of the echelon basis; the deterministic tie-break key.
    Vec flatten() const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator<(const Subspace& o) const;

private:
    std::size_t ambient_;
    Matrix basis_;
};

Line canonicalize_line(const Point& point, const Vec& raw_dir);
bool line_contains(const Line& l, const Point& p);
bool parallel_to(const Line& l, const Subspace& v);

/// Affine frame sending P to the origin and the i-th line onto the i-th
/// coordinate axis. Lines must pass through P with independent directions.
AffineMap frame_transform(const Point& p, const std::vector<Line>& lines);

/// A deterministic transform sending l to the x_d-axis; returns the map and
/// p_T, the last coordinate of P's image (P maps to (0,...,0,p_T)).
std::pair<AffineMap, u64> axis_transform(const Point& p, const Line& l);

/// The p points base + t*dir for t = 0..p-1, in parameter order.
std::vector<Point> enumerate_line_points(const Line& l);

} // namespace jointkit
