#include "jointkit/geometry.hpp"

#include <algorithm>

namespace jointkit {

Direction::Direction(const PrimeField& field, const Vec& raw) : field_(field), v_(raw) {
    for (u64& x : v_) x = field.reduce(x);
    std::size_t piv = v_.size();
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (v_[i] != 0) {
            piv = i;
            break;
        }
    }
    if (piv == v_.size()) throw ZeroDirection();
    pivot_ = piv;
    if (v_[piv] != 1) {
        u64 s = field.inv(v_[piv]);
        for (u64& x : v_) x = field.mul(x, s);
    }
}

Line::Line(Point base, Direction dir) : base_(std::move(base)), dir_(std::move(dir)) {
    if (base_.dim() != dir_.dim()) throw BadParams("base/direction dimension mismatch");
    const PrimeField& f = dir_.field();
    // Slide the base along the line so its pivot coordinate is 0.
    u64 t = base_.coords[dir_.pivot()];
    if (t != 0) {
        for (std::size_t i = 0; i < base_.dim(); ++i)
            base_.coords[i] = f.sub(base_.coords[i], f.mul(t, dir_.vec()[i]));
    }
}

Point Line::at(u64 t) const {
    const PrimeField& f = field();
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = f.add(base_.coords[i], f.mul(f.reduce(t), dir_.vec()[i]));
    return Point(f, std::move(c));
}

AffineMap::AffineMap(Matrix linear, Vec shift)
    : linear_(std::move(linear)), shift_(std::move(shift)) {
    if (linear_.rows() != linear_.cols() || linear_.rows() != shift_.size())
        throw BadParams("affine map shape mismatch");
    for (u64& x : shift_) x = linear_.field().reduce(x);
    if (rank(linear_) != linear_.rows()) throw DependentDirections();
}

Vec AffineMap::apply(const Vec& x) const {
    Vec y = linear_.apply(x);
    const PrimeField& f = field();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], shift_[i]);
    return y;
}

AffineMap AffineMap::inverse() const {
    Matrix ainv = *jointkit::inverse(linear_); // invertibility checked at construction
    Vec b = ainv.apply(shift_);
    const PrimeField& f = field();
    for (u64& x : b) x = f.neg(x);
    return AffineMap(std::move(ainv), std::move(b));
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    Matrix a = matmul(linear_, other.linear());
    Vec b = linear_.apply(other.shift());
    const PrimeField& f = field();
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = f.add(b[i], shift_[i]);
    return AffineMap(std::move(a), std::move(b));
}

AffineMap AffineMap::identity(const PrimeField& field, std::size_t d) {
    return AffineMap(Matrix::identity(field, d), Vec(d, 0));
}

Subspace::Subspace(const PrimeField& field, std::size_t ambient_dim,
                   const std::vector<Vec>& spanning)
    : ambient_(ambient_dim), basis_(field, 0, ambient_dim) {
    for (const Vec& v : spanning)
        if (v.size() != ambient_dim) throw BadParams("spanning vector dimension mismatch");
    if (!spanning.empty())
        basis_ = row_space_rref(Matrix::from_rows(field, spanning));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw BadParams("vector dimension mismatch");
    if (is_zero_vec(v)) return true;
    if (basis_.rows() == 0) return false;
    std::vector<Vec> rows;
    rows.reserve(basis_.rows() + 1);
    for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    rows.push_back(v);
    return rank(Matrix::from_rows(basis_.field(), rows)) == basis_.rows();
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Vec Subspace::flatten() const {
    Vec out;
    out.reserve(basis_.rows() * ambient_);
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) out.push_back(basis_.at(i, j));
    return out;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return flatten() < o.flatten();
}

Line canonicalize_line(const Point& point, const Vec& raw_dir) {
    Direction d(point.field, raw_dir);
    return Line(point, std::move(d));
}

bool line_contains(const Line& l, const Point& p) {
    if (p.dim() != l.dim()) throw BadParams("point dimension mismatch");
    const PrimeField& f = l.field();
    u64 t = p.coords[l.dir().pivot()];
    for (std::size_t i = 0; i < l.dim(); ++i) {
        u64 expect = f.add(l.base().coords[i], f.mul(t, l.dir().vec()[i]));
        if (expect != p.coords[i]) return false;
    }
    return true;
}

bool parallel_to(const Line& l, const Subspace& v) { return v.contains(l.dir().vec()); }

AffineMap frame_transform(const Point& p, const std::vector<Line>& lines) {
    const std::size_t d = p.dim();
    if (lines.size() != d) throw BadParams("need exactly d lines");
    const PrimeField& f = p.field;
    for (const Line& l : lines)
        if (!line_contains(l, p)) throw NotIncident();
    Matrix cols(f, d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) cols.at(i, j) = lines[j].dir().vec()[i];
    auto ainv = inverse(cols);
    if (!ainv) throw DependentDirections();
    Vec b = ainv->apply(p.coords);
    for (u64& x : b) x = f.neg(x);
    return AffineMap(std::move(*ainv), std::move(b));
}

std::pair<AffineMap, u64> axis_transform(const Point& p, const Line& l) {
    if (!line_contains(l, p)) throw NotIncident();
    const std::size_t d = l.dim();
    const PrimeField& f = l.field();
    // Complete dir(l) to a basis with standard basis vectors in index order,
    // direction last, so the line becomes the x_d-axis.
    std::vector<Vec> chosen;
    chosen.push_back(l.dir().vec());
    std::vector<Vec> order;
    for (std::size_t i = 0; i < d && chosen.size() < d; ++i) {
        Vec e(d, 0);
        e[i] = 1;
        std::vector<Vec> probe = chosen;
        probe.push_back(e);
        if (rank(Matrix::from_rows(f, probe)) == probe.size()) {
            chosen.push_back(e);
            order.push_back(std::move(e));
        }
    }
    order.push_back(l.dir().vec());
    Matrix cols(f, d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) cols.at(i, j) = order[j][i];
    Matrix a = *inverse(cols);
    Vec b = a.apply(l.base().coords);
    for (u64& x : b) x = f.neg(x);
    u64 p_t = p.coords[l.dir().pivot()];
    return {AffineMap(std::move(a), std::move(b)), p_t};
}

std::vector<Point> enumerate_line_points(const Line& l) {
    std::vector<Point> pts;
    const u64 p = l.field().modulus();
    pts.reserve(p);
    for (u64 t = 0; t < p; ++t) pts.push_back(l.at(t));
    return pts;
}

} // namespace jointkit
