#include "jointkit/multiplicity.hpp"

#include <algorithm>

namespace jointkit {

bool sends_line_to_axis(const AffineMap& t, const Line& l) {
    const std::size_t d = l.dim();
    Vec img_dir = t.linear().apply(l.dir().vec());
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (img_dir[i] != 0) return false;
    if (img_dir[d - 1] == 0) return false;
    Vec img_base = t.apply(l.base().coords);
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (img_base[i] != 0) return false;
    return true;
}

LineRestriction::LineRestriction(const SparsePoly& q, const Line& l)
    : line_(l), transform_(axis_transform(l.base(), l).first) {
    build(q);
}

LineRestriction::LineRestriction(const SparsePoly& q, const Line& l, const AffineMap& t)
    : line_(l), transform_(t) {
    if (!sends_line_to_axis(t, l)) throw BadParams("transform does not send line to x_d-axis");
    build(q);
}

void LineRestriction::build(const SparsePoly& q) {
    if (q.is_zero()) throw ZeroPolynomial();
    SparsePoly r = pullback(q, transform_);
    decomposition_ = axis_decomposition(r);
    u64 best = 0;
    bool first = true;
    for (const auto& [alpha, f] : decomposition_) {
        u64 deg = 0;
        for (u32 e : alpha) deg += e;
        if (first || deg < best) {
            best = deg;
            first = false;
        }
    }
    lowest_degree_ = best;
    for (const auto& [alpha, f] : decomposition_) {
        u64 deg = 0;
        for (u32 e : alpha) deg += e;
        if (deg == best) lowest_tuples_.push_back(alpha);
    }
}

u64 LineRestriction::param_of(const Point& p) const {
    if (!line_contains(line_, p)) throw NotIncident();
    Vec img = transform_.apply(p.coords);
    return img.back();
}

u64 LineRestriction::value_at_param(u64 p_t) const {
    u64 best = 0;
    bool first = true;
    for (const auto& alpha : lowest_tuples_) {
        u64 m = root_multiplicity(decomposition_.at(alpha), p_t);
        if (first || m < best) {
            best = m;
            first = false;
        }
        if (best == 0) break;
    }
    return best;
}

u64 LineRestriction::value_at(const Point& p) const { return value_at_param(param_of(p)); }

MultiplicityReport pl_multiplicity(const SparsePoly& q, const Point& p, const Line& l) {
    if (!line_contains(l, p)) throw NotIncident();
    LineRestriction lr(q, l);
    u64 pt = lr.param_of(p);
    return MultiplicityReport{lr.value_at_param(pt), lr.lowest_degree(), lr.lowest_tuples(),
                              lr.transform(), pt};
}

MultiplicityReport pl_multiplicity_with(const SparsePoly& q, const Point& p, const Line& l,
                                        const AffineMap& t) {
    if (!line_contains(l, p)) throw NotIncident();
    LineRestriction lr(q, l, t);
    u64 pt = lr.param_of(p);
    return MultiplicityReport{lr.value_at_param(pt), lr.lowest_degree(), lr.lowest_tuples(),
                              lr.transform(), pt};
}

u64 bezout_sum(const SparsePoly& q, const Line& l) {
    LineRestriction lr(q, l);
    const u64 p = l.field().modulus();
    u64 sum = 0;
    for (u64 t = 0; t < p; ++t) sum += lr.value_at_param(t);
    if (static_cast<i64>(sum) > q.total_degree())
        throw AssertionFailed("bezout sum exceeds degree");
    return sum;
}

namespace {

JointClass classify_from_frame(const SparsePoly& q, const AffineMap& t) {
    SparsePoly r = pullback(q, t);
    SparsePoly low = lowest_homogeneous(r);
    const std::size_t d = q.dim();
    for (const auto& [m, c] : low.terms())
        if (m.exps[d - 1] != 0) return JointClass::Special;
    return JointClass::Ordinary;
}

} // namespace

JointClass classify_joint(const SparsePoly& q, const Point& p, const Line& l) {
    if (q.is_zero()) throw ZeroPolynomial();
    if (!line_contains(l, p)) throw NotIncident();
    auto [t0, p_t] = axis_transform(p, l);
    // Re-anchor so P itself maps to the origin.
    Vec shift = t0.shift();
    const PrimeField& f = q.field();
    shift.back() = f.sub(shift.back(), p_t);
    AffineMap t(t0.linear(), std::move(shift));
    return classify_from_frame(q, t);
}

JointClass classify_joint_with(const SparsePoly& q, const Point& p, const Line& l,
                               const AffineMap& t) {
    if (q.is_zero()) throw ZeroPolynomial();
    if (!line_contains(l, p)) throw NotIncident();
    if (!sends_line_to_axis(t, l)) throw BadParams("frame does not send line to x_d-axis");
    if (!is_zero_vec(t.apply(p.coords))) throw BadParams("frame does not send point to origin");
    return classify_from_frame(q, t);
}

u64 expansion_lower_bound(const SparsePoly& pulled_back, u64 p_t, std::size_t var) {
    if (pulled_back.is_zero()) throw ZeroPolynomial();
    const std::size_t d = pulled_back.dim();
    if (var >= d) throw BadParams("variable index out of range");
    Vec center(d, 0);
    center.back() = p_t;
    SparsePoly s = shift_to_point(pulled_back, Point(pulled_back.field(), center));
    SparsePoly low = lowest_homogeneous(s);
    u64 best = 0;
    for (const auto& [m, c] : low.terms()) best = std::max<u64>(best, m.exps[var]);
    return best;
}

} // namespace jointkit
