#include "jointkit/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace jointkit {
namespace oracle {

namespace {

// Local rank computation, kept separate from the library's elimination.
std::size_t naive_rank(const PrimeField& f, std::vector<Vec> rows) {
    std::size_t rank = 0;
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < nc; ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        u64 inv = f.inv(rows[rank][c]);
        for (u64& x : rows[rank]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            u64 m = rows[r][c];
            for (std::size_t j = 0; j < nc; ++j)
                rows[r][j] = f.sub(rows[r][j], f.mul(m, rows[rank][j]));
        }
        ++rank;
        if (rank == rows.size()) break;
    }
    return rank;
}

std::vector<Line> incident_unit_entries(const LineSystem& l, const Point& p,
                                        std::optional<u32> family, u64 bound) {
    std::vector<Line> units;
    for (const LineEntry& e : l.entries()) {
        if (family && e.family != family) continue;
        if (!line_contains(e.line, p)) continue;
        for (u64 k = 0; k < e.mult; ++k) {
            units.push_back(e.line);
            if (units.size() > bound) throw TooLarge("incident entry count");
        }
    }
    return units;
}

u64 uniform(std::mt19937_64& rng, u64 n) { return rng() % n; }

} // namespace

std::vector<Vec> space_vectors(const PrimeField& field, std::size_t d,
                               const std::vector<Vec>& basis_rows) {
    std::set<Vec> members;
    members.insert(Vec(d, 0));
    const u64 p = field.modulus();
    std::vector<u64> coeff(basis_rows.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == basis_rows.size()) {
            Vec v(d, 0);
            for (std::size_t i = 0; i < basis_rows.size(); ++i)
                for (std::size_t t = 0; t < d; ++t)
                    v[t] = field.add(v[t], field.mul(coeff[i], basis_rows[i][t]));
            members.insert(std::move(v));
            return;
        }
        for (u64 c = 0; c < p; ++c) {
            coeff[idx] = c;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return std::vector<Vec>(members.begin(), members.end());
}

std::vector<std::vector<Vec>> subspace_sets(const PrimeField& field, std::size_t d,
                                            const std::vector<Vec>& space, std::size_t k) {
    const u64 p = field.modulus();
    std::set<std::vector<Vec>> level;
    level.insert({Vec(d, 0)});
    for (std::size_t dim = 0; dim < k; ++dim) {
        std::set<std::vector<Vec>> next;
        for (const std::vector<Vec>& sub : level) {
            std::set<Vec> have(sub.begin(), sub.end());
            for (const Vec& v : space) {
                if (have.count(v)) continue;
                // span(sub, v) = { a + c v : a in sub, c in F_p }
                std::set<Vec> grown;
                for (const Vec& a : sub)
                    for (u64 c = 0; c < p; ++c) {
                        Vec w(d);
                        for (std::size_t t = 0; t < d; ++t)
                            w[t] = field.add(a[t], field.mul(c, v[t]));
                        grown.insert(std::move(w));
                    }
                next.insert(std::vector<Vec>(grown.begin(), grown.end()));
            }
        }
        level = std::move(next);
    }
    return std::vector<std::vector<Vec>>(level.begin(), level.end());
}

u64 parallel_count_in_set(const LineSystem& l, const Point& p,
                          const std::vector<Vec>& members) {
    std::set<Vec> s(members.begin(), members.end());
    u64 n = 0;
    for (const LineEntry& e : l.entries())
        if (line_contains(e.line, p) && s.count(e.line.dir().vec())) n += e.mult;
    return n;
}

u64 nonparallel_count_in_set(const LineSystem& l, const Point& p,
                             const std::vector<Vec>& members) {
    std::set<Vec> s(members.begin(), members.end());
    u64 n = 0;
    for (const LineEntry& e : l.entries())
        if (line_contains(e.line, p) && !s.count(e.line.dir().vec())) n += e.mult;
    return n;
}

u64 oracle_minima(const LineSystem& l, const Point& p, std::size_t j) {
    const std::size_t d = l.dim();
    const u64 pm = l.field().modulus();
    if (pm > 5 || d > 4) throw TooLarge("oracle_minima requires p <= 5 and d <= 4");
    if (j < 1 || j > d) throw BadParams("j out of range");
    std::vector<Vec> unit;
    for (std::size_t i = 0; i < d; ++i) {
        Vec e(d, 0);
        e[i] = 1;
        unit.push_back(std::move(e));
    }
    std::vector<Vec> whole = space_vectors(l.field(), d, unit);
    u64 best = 0;
    bool first = true;
    for (const std::vector<Vec>& sub : subspace_sets(l.field(), d, whole, j - 1)) {
        u64 c = nonparallel_count_in_set(l, p, sub);
        if (first || c < best) {
            best = c;
            first = false;
        }
    }
    return best;
}

std::optional<u64> oracle_classical_multiplicity(const SparsePoly& q, const Point& p,
                                                 const Line& l) {
    if (q.is_zero()) throw ZeroPolynomial();
    if (!line_contains(l, p)) throw NotIncident();
    const PrimeField& f = q.field();
    const std::size_t d = q.dim();

    // Restrict Q to base + t*dir by naive univariate expansion.
    auto uni_mul = [&](const Vec& a, const Vec& b) {
        Vec c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
        return c;
    };
    Vec restriction(1, 0);
    std::size_t max_len = 1;
    for (const auto& [m, c] : q.terms()) {
        Vec term(1, c);
        for (std::size_t i = 0; i < d; ++i) {
            Vec lin = {l.base().coords[i], l.dir().vec()[i]}; // base_i + dir_i t
            for (u32 e = 0; e < m.exps[i]; ++e) term = uni_mul(term, lin);
        }
        max_len = std::max(max_len, term.size());
        restriction.resize(std::max(restriction.size(), term.size()), 0);
        for (std::size_t i = 0; i < term.size(); ++i)
            restriction[i] = f.add(restriction[i], term[i]);
    }
    bool zero = true;
    for (u64 x : restriction)
        if (x != 0) zero = false;
    if (zero) return std::nullopt;
    u64 t_p = p.coords[l.dir().pivot()];
    return root_multiplicity(UniPoly(f, restriction), t_p);
}

u64 oracle_joint_tuples(const LineSystem& l, const Point& p, u64 bound) {
    const std::size_t d = l.dim();
    auto units = incident_unit_entries(l, p, std::nullopt, bound);
    if (units.size() < d) return 0;
    u64 count = 0;
    std::vector<std::size_t> pick;
    std::vector<bool> used(units.size(), false);
    auto rec = [&](auto&& self) -> void {
        if (pick.size() == d) {
            std::vector<Vec> dirs;
            for (std::size_t i : pick) dirs.push_back(units[i].dir().vec());
            if (naive_rank(l.field(), dirs) == d) ++count;
            return;
        }
        for (std::size_t i = 0; i < units.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick.push_back(i);
            self(self);
            pick.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return count;
}

u64 oracle_multijoint_tuples(const LineSystem& l, const Point& p, u64 bound) {
    if (!l.has_families()) throw MissingFamilies();
    const std::size_t d = l.dim();
    std::vector<std::vector<Line>> per_family;
    for (u32 i = 1; i <= static_cast<u32>(d); ++i)
        per_family.push_back(incident_unit_entries(l, p, i, bound));
    u64 count = 0;
    std::vector<Vec> dirs;
    auto rec = [&](auto&& self, std::size_t fam) -> void {
        if (fam == d) {
            if (naive_rank(l.field(), dirs) == d) ++count;
            return;
        }
        for (const Line& ln : per_family[fam]) {
            dirs.push_back(ln.dir().vec());
            self(self, fam + 1);
            dirs.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

AffineMap random_axis_transform(const Line& l, u64 seed) {
    const PrimeField& f = l.field();
    const std::size_t d = l.dim();
    const u64 p = f.modulus();
    std::mt19937_64 rng(seed);
    while (true) {
        // A^{-1} with last column a nonzero multiple of the direction.
        Matrix ainv_cols(f, d, d);
        u64 s = 1 + uniform(rng, p - 1);
        for (std::size_t i = 0; i < d; ++i)
            ainv_cols.at(i, d - 1) = f.mul(s, l.dir().vec()[i]);
        for (std::size_t j = 0; j + 1 < d; ++j)
            for (std::size_t i = 0; i < d; ++i) ainv_cols.at(i, j) = uniform(rng, p);
        auto a = inverse(ainv_cols);
        if (!a) continue;
        Vec b = a->apply(l.base().coords);
        for (u64& x : b) x = f.neg(x);
        b[d - 1] = f.add(b[d - 1], uniform(rng, p)); // slide along the axis
        return AffineMap(std::move(*a), std::move(b));
    }
}

AffineMap random_pointed_axis_transform(const Point& p, const Line& l, u64 seed) {
    AffineMap t = random_axis_transform(l, seed);
    Vec img = t.apply(p.coords);
    Vec shift = t.shift();
    const PrimeField& f = l.field();
    shift.back() = f.sub(shift.back(), img.back());
    return AffineMap(t.linear(), std::move(shift));
}

u64 oracle_invariance(const SparsePoly& q, const Point& p, const Line& l, std::size_t k,
                      u64 seed) {
    if (q.is_zero()) throw ZeroPolynomial();
    if (!line_contains(l, p)) throw NotIncident();
    if (k < 2) throw BadParams("need at least two transforms");
    const std::size_t d = q.dim();

    std::optional<u64> agreed;
    for (std::size_t trial = 0; trial < k; ++trial) {
        AffineMap t = random_axis_transform(l, seed + 0x9e3779b97f4a7c15ULL * trial);
        SparsePoly r = pullback(q, t);
        u64 p_t = t.apply(p.coords).back();

        // Recompute the definition from scratch on r.
        u64 lowest = ~u64{0};
        for (const auto& [m, c] : r.terms()) {
            u64 deg = 0;
            for (std::size_t i = 0; i + 1 < d; ++i) deg += m.exps[i];
            lowest = std::min(lowest, deg);
        }
        u64 value = ~u64{0};
        std::map<std::vector<u32>, UniPoly> fs;
        for (const auto& [m, c] : r.terms()) {
            u64 deg = 0;
            for (std::size_t i = 0; i + 1 < d; ++i) deg += m.exps[i];
            if (deg != lowest) continue;
            std::vector<u32> alpha(m.exps.begin(), m.exps.end() - 1);
            auto it = fs.find(alpha);
            if (it == fs.end()) it = fs.emplace(alpha, UniPoly::zero(q.field())).first;
            it->second.add_term(m.exps[d - 1], c);
        }
        for (const auto& [alpha, fa] : fs)
            value = std::min(value, root_multiplicity(fa, p_t));
        if (agreed && *agreed != value)
            throw InvarianceViolation("multiplicity differs across transforms");
        agreed = value;
    }
    return *agreed;
}

} // namespace oracle
} // namespace jointkit
