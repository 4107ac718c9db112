#include "jointkit/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jointkit {

Point random_point(const PrimeField& f, std::size_t d, Rng& rng) {
    Vec c(d);
    for (u64& x : c) x = rng.field_value(f);
    return Point(f, std::move(c));
}

Direction random_direction(const PrimeField& f, std::size_t d, Rng& rng) {
    while (true) {
        Vec v(d);
        for (u64& x : v) x = rng.field_value(f);
        if (!is_zero_vec(v)) return Direction(f, v);
    }
}

Line random_line(const PrimeField& f, std::size_t d, Rng& rng) {
    Point p = random_point(f, d, rng);
    Direction dir = random_direction(f, d, rng);
    return Line(p, dir);
}

SparsePoly random_poly(const PrimeField& f, std::size_t d, u64 max_degree, std::size_t terms,
                       Rng& rng, bool force_top) {
    while (true) {
        SparsePoly q(f, d);
        for (std::size_t t = 0; t < terms; ++t) {
            Monomial m(d);
            u64 budget = max_degree;
            for (std::size_t i = 0; i < d; ++i) {
                u64 e = rng.below(budget + 1);
                m.exps[i] = static_cast<u32>(e);
                budget -= e;
            }
            q.add_term(m, rng.field_value(f));
        }
        if (force_top && q.total_degree() != static_cast<i64>(max_degree)) {
            Monomial top(d);
            u64 budget = max_degree;
            for (std::size_t i = 0; i + 1 < d; ++i) {
                u64 e = rng.below(budget + 1);
                top.exps[i] = static_cast<u32>(e);
                budget -= e;
            }
            top.exps[d - 1] = static_cast<u32>(budget);
            q.set_term(top, rng.nonzero_field_value(f));
        }
        if (!q.is_zero()) return q;
    }
}

AffineMap random_affine(const PrimeField& f, std::size_t d, Rng& rng) {
    while (true) {
        Matrix a(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) a.at(i, j) = rng.field_value(f);
        if (rank(a) != d) continue;
        Vec b(d);
        for (u64& x : b) x = rng.field_value(f);
        return AffineMap(std::move(a), std::move(b));
    }
}

LineSystem generate_axes(const PrimeField& f, std::size_t d) {
    std::vector<LineEntry> entries;
    for (std::size_t i = 0; i < d; ++i) {
        Vec dir(d, 0);
        dir[i] = 1;
        entries.push_back(LineEntry{canonicalize_line(Point(f, Vec(d, 0)), dir), 1, std::nullopt});
    }
    return LineSystem(f, d, std::move(entries));
}

LineSystem generate_grid(const PrimeField& f, std::size_t d) {
    const u64 p = f.modulus();
    std::vector<LineEntry> entries;
    for (std::size_t axis = 0; axis < d; ++axis) {
        Vec dir(d, 0);
        dir[axis] = 1;
        // Base points: the coordinate hyperplane x_axis = 0.
        Vec base(d, 0);
        while (true) {
            entries.push_back(
                LineEntry{canonicalize_line(Point(f, base), dir), 1, std::nullopt});
            std::size_t i = d;
            bool done = true;
            while (i-- > 0) {
                if (i == axis) continue;
                if (++base[i] < p) {
                    done = false;
                    break;
                }
                base[i] = 0;
            }
            if (done) break;
        }
    }
    return LineSystem(f, d, std::move(entries));
}

LineSystem generate_random(const PrimeField& f, std::size_t d, u64 n, u64 seed) {
    if (n == 0) throw BadParams("need at least one line");
    Rng rng(seed);
    std::set<Line> lines;
    while (lines.size() < n) lines.insert(random_line(f, d, rng));
    std::vector<LineEntry> entries;
    for (const Line& l : lines) entries.push_back(LineEntry{l, 1, std::nullopt});
    return LineSystem(f, d, std::move(entries));
}

LineSystem generate_random_with_joints(const PrimeField& f, std::size_t d, u64 n, u64 planted,
                                       u64 seed) {
    if (n == 0) throw BadParams("need at least one line");
    if (planted * d > n) throw BadParams("not enough lines for the planted joints");
    Rng rng(seed);
    std::set<Line> lines;
    for (u64 k = 0; k < planted; ++k) {
        Point anchor = random_point(f, d, rng);
        std::vector<Vec> dirs;
        while (dirs.size() < d) {
            Direction dir = random_direction(f, d, rng);
            std::vector<Vec> probe = dirs;
            probe.push_back(dir.vec());
            if (rank(Matrix::from_rows(f, probe)) == probe.size()) dirs.push_back(dir.vec());
        }
        for (const Vec& dir : dirs) lines.insert(canonicalize_line(anchor, dir));
    }
    while (lines.size() < n) lines.insert(random_line(f, d, rng));
    std::vector<LineEntry> entries;
    for (const Line& l : lines) entries.push_back(LineEntry{l, 1, std::nullopt});
    return LineSystem(f, d, std::move(entries));
}

namespace {

bool family_clean(const LineSystem& ls) {
    // No point may carry two lines of the same family.
    const auto& entries = ls.entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].family != entries[j].family) continue;
            if (entries[i].line == entries[j].line) return false;
            if (intersect_lines(entries[i].line, entries[j].line)) return false;
        }
    return true;
}

} // namespace

LineSystem generate_families(const PrimeField& f, std::size_t d, const std::vector<u64>& sizes,
                             u64 planted, u64 seed, bool clean) {
    if (sizes.size() != d) throw BadParams("need one size per family");
    for (u64 s : sizes)
        if (s == 0) throw BadParams("every family must be nonempty");
    if (planted > *std::min_element(sizes.begin(), sizes.end()))
        throw BadParams("not enough lines per family for the planted multijoints");

    for (u64 attempt = 0;; ++attempt) {
        if (attempt > 4096) throw BadParams("could not sample a family system");
        Rng rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
        std::vector<std::set<Line>> families(d);
        bool ok = true;
        for (u64 k = 0; k < planted && ok; ++k) {
            Point anchor = random_point(f, d, rng);
            std::vector<Vec> dirs;
            u64 guard = 0;
            while (dirs.size() < d) {
                if (++guard > 4096) {
                    ok = false;
                    break;
                }
                Direction dir = random_direction(f, d, rng);
                std::vector<Vec> probe = dirs;
                probe.push_back(dir.vec());
                if (rank(Matrix::from_rows(f, probe)) == probe.size()) dirs.push_back(dir.vec());
            }
            if (!ok) break;
            for (std::size_t i = 0; i < d; ++i)
                if (!families[i].insert(canonicalize_line(anchor, dirs[i])).second) ok = false;
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < d && ok; ++i) {
            u64 guard = 0;
            while (families[i].size() < sizes[i]) {
                if (++guard > 65536) {
                    ok = false;
                    break;
                }
                families[i].insert(random_line(f, d, rng));
            }
        }
        if (!ok) continue;
        std::vector<LineEntry> entries;
        for (std::size_t i = 0; i < d; ++i)
            for (const Line& l : families[i])
                entries.push_back(LineEntry{l, 1, static_cast<u32>(i + 1)});
        LineSystem ls(f, d, std::move(entries));
        if (clean && !family_clean(ls)) continue;
        return ls;
    }
}

} // namespace jointkit
