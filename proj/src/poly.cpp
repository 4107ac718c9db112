#include "jointkit/poly.hpp"

#include <algorithm>
#include <limits>

namespace jointkit {

namespace {
constexpr u32 kExpLimit = std::numeric_limits<u32>::max() / 4;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw BadParams("monomial dimension mismatch");
    Monomial r(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        u64 s = u64{exps[i]} + o.exps[i];
        if (s > kExpLimit) throw ExponentOverflow();
        r.exps[i] = static_cast<u32>(s);
    }
    return r;
}

UniPoly::UniPoly(const PrimeField& field, Vec coeffs) : field_(field), c_(std::move(coeffs)) {
    for (u64& x : c_) x = field_.reduce(x);
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 UniPoly::eval(u64 x) const {
    x = field_.reduce(x);
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

UniPoly& UniPoly::add_term(u64 degree, u64 coeff) {
    if (degree > kExpLimit) throw ExponentOverflow();
    if (c_.size() <= degree) c_.resize(degree + 1, 0);
    c_[degree] = field_.add(c_[degree], field_.reduce(coeff));
    trim();
    return *this;
}

u64 root_multiplicity(const UniPoly& f, u64 a) {
    if (f.is_zero()) throw ZeroPolynomial();
    const PrimeField& fld = f.field();
    a = fld.reduce(a);
    Vec cur = f.coeffs();
    u64 mult = 0;
    while (true) {
        // Synthetic division by (x - a); the remainder is cur evaluated at a.
        u64 acc = 0;
        Vec quot(cur.size() > 1 ? cur.size() - 1 : 0, 0);
        for (std::size_t i = cur.size(); i-- > 0;) {
            u64 next = fld.add(fld.mul(acc, a), cur[i]);
            if (i > 0) quot[i - 1] = next;
            acc = next;
        }
        if (acc != 0) return mult;
        ++mult;
        cur = std::move(quot);
        if (cur.empty()) return mult; // f was (x-a)^mult exactly up to scale
    }
}

SparsePoly SparsePoly::constant(const PrimeField& field, std::size_t d, u64 c) {
    SparsePoly q(field, d);
    q.add_term(Monomial(d), c);
    return q;
}

SparsePoly SparsePoly::variable(const PrimeField& field, std::size_t d, std::size_t i,
                                u32 power) {
    if (i >= d) throw BadParams("variable index out of range");
    SparsePoly q(field, d);
    Monomial m(d);
    m.exps[i] = power;
    q.add_term(m, 1);
    return q;
}

i64 SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    // The map is graded: the last key has maximal total degree.
    return static_cast<i64>(terms_.rbegin()->first.total_degree());
}

u64 SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Monomial& m, u64 c) {
    if (m.dim() != d_) throw BadParams("monomial dimension mismatch");
    c = field_.reduce(c);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::set_term(const Monomial& m, u64 c) {
    if (m.dim() != d_) throw BadParams("monomial dimension mismatch");
    c = field_.reduce(c);
    terms_.erase(m);
    if (c != 0) terms_.emplace(m, c);
}

u64 SparsePoly::eval(const Point& p) const {
    if (p.dim() != d_) throw BadParams("point dimension mismatch");
    u64 acc = 0;
    for (const auto& [m, c] : terms_) {
        u64 t = c;
        for (std::size_t i = 0; i < d_; ++i)
            if (m.exps[i] != 0) t = field_.mul(t, field_.pow(p.coords[i], m.exps[i]));
        acc = field_.add(acc, t);
    }
    return acc;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r(field_, d_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, field_.mul(ca, cb));
    return r;
}

SparsePoly SparsePoly::scaled(u64 c) const {
    SparsePoly r(field_, d_);
    c = field_.reduce(c);
    for (const auto& [m, v] : terms_) r.add_term(m, field_.mul(v, c));
    return r;
}

SparsePoly substitute(const SparsePoly& q, const std::vector<LinearForm>& forms) {
    const std::size_t d = q.dim();
    if (forms.size() != d) throw BadParams("need one form per variable");
    const PrimeField& f = q.field();

    std::vector<SparsePoly> base;
    base.reserve(d);
    for (const LinearForm& lf : forms) {
        if (lf.coeffs.size() != d) throw BadParams("form dimension mismatch");
        SparsePoly g(f, d);
        g.add_term(Monomial(d), lf.constant);
        for (std::size_t i = 0; i < d; ++i) {
            Monomial m(d);
            m.exps[i] = 1;
            g.add_term(m, lf.coeffs[i]);
        }
        base.push_back(std::move(g));
    }

    // powers[i][k] = forms[i]^k, grown on demand.
    std::vector<std::vector<SparsePoly>> powers(d);
    for (std::size_t i = 0; i < d; ++i) powers[i].push_back(SparsePoly::constant(f, d, 1));
    auto power = [&](std::size_t i, u32 e) -> const SparsePoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * base[i]);
        return powers[i][e];
    };

    SparsePoly out(f, d);
    for (const auto& [m, c] : q.terms()) {
        SparsePoly t = SparsePoly::constant(f, d, c);
        for (std::size_t i = 0; i < d; ++i)
            if (m.exps[i] != 0) t = t * power(i, m.exps[i]);
        out = out + t;
    }
    return out;
}

SparsePoly pullback(const SparsePoly& q, const AffineMap& t) {
    if (t.dim() != q.dim()) throw BadParams("map dimension mismatch");
    AffineMap tinv = t.inverse();
    std::vector<LinearForm> forms(q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) {
        forms[i].coeffs = tinv.linear().row(i);
        forms[i].constant = tinv.shift()[i];
    }
    return substitute(q, forms);
}

SparsePoly shift_to_point(const SparsePoly& q, const Point& p) {
    if (p.dim() != q.dim()) throw BadParams("point dimension mismatch");
    std::vector<LinearForm> forms(q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) {
        forms[i].coeffs = Vec(q.dim(), 0);
        forms[i].coeffs[i] = 1;
        forms[i].constant = p.coords[i];
    }
    return substitute(q, forms);
}

std::map<std::vector<u32>, UniPoly> axis_decomposition(const SparsePoly& q) {
    const std::size_t d = q.dim();
    const PrimeField& f = q.field();
    std::map<std::vector<u32>, UniPoly> out;
    for (const auto& [m, c] : q.terms()) {
        std::vector<u32> alpha(m.exps.begin(), m.exps.end() - 1);
        auto it = out.find(alpha);
        if (it == out.end()) it = out.emplace(std::move(alpha), UniPoly::zero(f)).first;
        it->second.add_term(m.exps[d - 1], c);
    }
    return out;
}

SparsePoly lowest_homogeneous(const SparsePoly& q) {
    if (q.is_zero()) throw ZeroPolynomial();
    u64 low = q.terms().begin()->first.total_degree(); // graded order: first key is minimal
    SparsePoly r(q.field(), q.dim());
    for (const auto& [m, c] : q.terms()) {
        if (m.total_degree() != low) break;
        r.add_term(m, c);
    }
    return r;
}

} // namespace jointkit
