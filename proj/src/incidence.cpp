#include "jointkit/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jointkit {

namespace {

u64 factorial(std::size_t n) {
    u64 r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Incremental echelon basis for independence tests during tuple search.
class SpanTracker {
public:
    explicit SpanTracker(const PrimeField& f) : f_(f) {}

    bool contains(Vec v) const {
        reduce(v);
        return is_zero_vec(v);
    }

    bool try_add(Vec v) {
        reduce(v);
        std::size_t piv = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv == v.size()) return false;
        u64 s = f_.inv(v[piv]);
        for (u64& x : v) x = f_.mul(x, s);
        rows_.emplace_back(piv, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    std::size_t dim() const { return rows_.size(); }

    std::vector<Vec> rows() const {
        std::vector<Vec> out;
        out.reserve(rows_.size());
        for (const auto& [piv, r] : rows_) out.push_back(r);
        return out;
    }

private:
    void reduce(Vec& v) const {
        for (const auto& [piv, r] : rows_) {
            if (v[piv] == 0) continue;
            u64 c = v[piv];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_.sub(v[i], f_.mul(c, r[i]));
        }
    }

    PrimeField f_;
    std::vector<std::pair<std::size_t, Vec>> rows_;
};

struct WeightedDir {
    Vec dir;
    u64 weight;
};

std::vector<WeightedDir> incident_direction_weights(const LineSystem& l, const Point& p,
                                                    std::optional<u32> family = std::nullopt) {
    std::map<Vec, u64> acc;
    for (const LineEntry& e : l.entries()) {
        if (family && e.family != family) continue;
        if (!line_contains(e.line, p)) continue;
        acc[e.line.dir().vec()] += e.mult;
    }
    std::vector<WeightedDir> out;
    out.reserve(acc.size());
    for (auto& [dir, w] : acc) out.push_back({dir, w});
    return out;
}

} // namespace

LineSystem::LineSystem(const PrimeField& field, std::size_t d, std::vector<LineEntry> entries)
    : field_(field), d_(d), entries_(std::move(entries)) {
    if (d_ < 2) throw BadParams("dimension must be at least 2");
    bool any_family = false, all_family = true;
    for (const LineEntry& e : entries_) {
        if (e.line.dim() != d_) throw BadParams("line dimension mismatch");
        if (e.line.field() != field_) throw ModulusMismatch();
        if (e.mult == 0) throw BadParams("entry multiplicity must be positive");
        if (e.family) {
            any_family = true;
            if (*e.family < 1 || *e.family > d_) throw BadParams("family label out of range");
        } else {
            all_family = false;
        }
    }
    if (any_family && !all_family) throw BadParams("families must label every entry or none");
    has_families_ = any_family;
    if (has_families_) {
        for (u32 i = 1; i <= d_; ++i)
            if (family_size(i) == 0) throw BadParams("every family must be nonempty");
    }
}

u64 LineSystem::total_multiplicity() const {
    u64 n = 0;
    for (const LineEntry& e : entries_) n += e.mult;
    return n;
}

u64 LineSystem::family_size(u32 i) const {
    if (!has_families_) throw MissingFamilies();
    u64 n = 0;
    for (const LineEntry& e : entries_)
        if (*e.family == i) n += e.mult;
    return n;
}

std::vector<std::size_t> LineSystem::incident_entries(const Point& p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (line_contains(entries_[i].line, p)) out.push_back(i);
    return out;
}

u64 LineSystem::incident_multiplicity(const Point& p) const {
    u64 n = 0;
    for (const LineEntry& e : entries_)
        if (line_contains(e.line, p)) n += e.mult;
    return n;
}

std::optional<Point> intersect_lines(const Line& a, const Line& b) {
    if (a == b) return std::nullopt;
    if (a.dir() == b.dir()) return std::nullopt; // parallel or identical
    const PrimeField& f = a.field();
    const std::size_t d = a.dim();
    Matrix m(f, d, 2);
    Vec rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        m.at(i, 0) = a.dir().vec()[i];
        m.at(i, 1) = f.neg(b.dir().vec()[i]);
        rhs[i] = f.sub(b.base().coords[i], a.base().coords[i]);
    }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    Point p = a.at((*sol)[0]);
    if (!line_contains(b, p)) return std::nullopt;
    return p;
}

std::vector<Point> find_joints(const LineSystem& l) {
    const std::size_t d = l.dim();
    std::set<Line> distinct;
    for (const LineEntry& e : l.entries()) distinct.insert(e.line);
    std::vector<Line> lines(distinct.begin(), distinct.end());

    std::set<Vec> candidates;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto p = intersect_lines(lines[i], lines[j]);
            if (p) candidates.insert(p->coords);
        }

    std::vector<Point> joints;
    for (const Vec& c : candidates) {
        Point p(l.field(), c);
        SpanTracker span(l.field());
        for (const Line& ln : lines)
            if (line_contains(ln, p)) span.try_add(ln.dir().vec());
        if (span.dim() == d) joints.push_back(p);
    }
    return joints;
}

u64 joint_multiplicity(const LineSystem& l, const Point& p) {
    const std::size_t d = l.dim();
    auto dirs = incident_direction_weights(l, p);
    if (dirs.size() < d) return 0;
    u64 total = 0;
    // Weighted count of unordered independent d-subsets of directions.
    auto dfs = [&](auto&& self, std::size_t start, const SpanTracker& span, std::size_t depth,
                   u64 prod) -> void {
        if (depth == d) {
            total += prod;
            return;
        }
        for (std::size_t i = start; i < dirs.size(); ++i) {
            if (span.contains(dirs[i].dir)) continue;
            SpanTracker next = span;
            next.try_add(dirs[i].dir);
            self(self, i + 1, next, depth + 1, prod * dirs[i].weight);
        }
    };
    dfs(dfs, 0, SpanTracker(l.field()), 0, 1);
    return total * factorial(d);
}

u64 multijoint_multiplicity(const LineSystem& l, const Point& p) {
    if (!l.has_families()) throw MissingFamilies();
    const std::size_t d = l.dim();
    std::vector<std::vector<WeightedDir>> per_family;
    per_family.reserve(d);
    for (u32 i = 1; i <= d; ++i)
        per_family.push_back(incident_direction_weights(l, p, i));

    u64 total = 0;
    auto dfs = [&](auto&& self, std::size_t fam, const SpanTracker& span, u64 prod) -> void {
        if (fam == d) {
            total += prod;
            return;
        }
        for (const WeightedDir& wd : per_family[fam]) {
            if (span.contains(wd.dir)) continue;
            SpanTracker next = span;
            next.try_add(wd.dir);
            self(self, fam + 1, next, prod * wd.weight);
        }
    };
    dfs(dfs, 0, SpanTracker(l.field()), 1);
    return total;
}

namespace {

u64 nonparallel_count(const LineSystem& l, const std::vector<std::size_t>& incident,
                      const Subspace& v) {
    u64 n = 0;
    for (std::size_t i : incident)
        if (!parallel_to(l.entries()[i].line, v)) n += l.entries()[i].mult;
    return n;
}

u64 parallel_count(const LineSystem& l, const std::vector<std::size_t>& incident,
                   const Subspace& v) {
    u64 n = 0;
    for (std::size_t i : incident)
        if (parallel_to(l.entries()[i].line, v)) n += l.entries()[i].mult;
    return n;
}

/// Span of the chosen direction vectors padded with standard basis vectors,
/// in index order, up to the target dimension.
std::optional<Subspace> padded_span(const PrimeField& f, std::size_t d,
                                    const std::vector<Vec>& chosen, std::size_t target) {
    SpanTracker span(f);
    for (const Vec& v : chosen) span.try_add(v);
    for (std::size_t i = 0; i < d && span.dim() < target; ++i) {
        Vec e(d, 0);
        e[i] = 1;
        span.try_add(e);
    }
    if (span.dim() != target) return std::nullopt;
    return Subspace(f, d, span.rows());
}

/// Candidate (k-dimensional) minimizing subspaces: spans of at most k incident
/// directions, padded with standard basis vectors.
std::vector<Subspace> minima_candidates(const LineSystem& l, const Point& p, std::size_t k) {
    const PrimeField& f = l.field();
    const std::size_t d = l.dim();
    auto dirs = incident_direction_weights(l, p);

    std::set<Vec> seen;
    std::vector<Subspace> out;
    std::vector<Vec> chosen;
    auto emit = [&]() {
        auto sub = padded_span(f, d, chosen, k);
        if (!sub) return;
        Vec key = sub->flatten();
        if (seen.insert(key).second) out.push_back(std::move(*sub));
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        emit();
        if (chosen.size() == k) return;
        for (std::size_t i = start; i < dirs.size(); ++i) {
            chosen.push_back(dirs[i].dir);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

std::vector<u64> successive_minima(const LineSystem& l, const Point& p) {
    const std::size_t d = l.dim();
    auto incident = l.incident_entries(p);
    std::vector<u64> r(d, 0);
    u64 total = 0;
    for (std::size_t i : incident) total += l.entries()[i].mult;
    r[0] = total;
    for (std::size_t j = 2; j <= d; ++j) {
        u64 best = total;
        for (const Subspace& v : minima_candidates(l, p, j - 1))
            best = std::min(best, nonparallel_count(l, incident, v));
        r[j - 1] = best;
    }
    return r;
}

std::vector<Subspace> subspaces_within(const PrimeField& field, const std::vector<Vec>& basis,
                                       std::size_t k) {
    const std::size_t j = basis.size();
    const std::size_t d = basis.empty() ? 0 : basis.front().size();
    std::vector<Subspace> out;
    if (k > j) return out;
    if (k == 0) {
        out.emplace_back(field, d, std::vector<Vec>{});
        return out;
    }
    const u64 p = field.modulus();

    // Enumerate k x j reduced-echelon coordinate matrices (pivot columns
    // ascending, pivot entries 1, zeros above/below pivots, free entries to
    // the right of each pivot in non-pivot columns).
    std::vector<std::size_t> pivots(k);
    auto emit = [&](const std::vector<Vec>& coord_rows) {
        std::vector<Vec> rows;
        rows.reserve(k);
        for (const Vec& cr : coord_rows) {
            Vec v(d, 0);
            for (std::size_t c = 0; c < j; ++c) {
                if (cr[c] == 0) continue;
                for (std::size_t t = 0; t < d; ++t)
                    v[t] = field.add(v[t], field.mul(cr[c], basis[c][t]));
            }
            rows.push_back(std::move(v));
        }
        out.emplace_back(field, d, rows);
    };

    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    std::vector<Vec> coord(k, Vec(j, 0));
    auto fill_free = [&](auto&& self, std::size_t slot) -> void {
        if (slot == free_slots.size()) {
            emit(coord);
            return;
        }
        auto [r, c] = free_slots[slot];
        for (u64 v = 0; v < p; ++v) {
            coord[r][c] = v;
            self(self, slot + 1);
        }
        coord[r][c] = 0;
    };
    auto choose_pivots = [&](auto&& self, std::size_t idx, std::size_t from) -> void {
        if (idx == k) {
            for (auto& row : coord) std::fill(row.begin(), row.end(), 0);
            free_slots.clear();
            std::set<std::size_t> pivset(pivots.begin(), pivots.end());
            for (std::size_t r = 0; r < k; ++r) {
                coord[r][pivots[r]] = 1;
                for (std::size_t c = pivots[r] + 1; c < j; ++c)
                    if (!pivset.count(c)) free_slots.emplace_back(r, c);
            }
            fill_free(fill_free, 0);
            return;
        }
        for (std::size_t c = from; c + (k - idx) <= j; ++c) {
            pivots[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    choose_pivots(choose_pivots, 0, 0);
    return out;
}

Flag build_flag(const LineSystem& l, const Point& p) {
    const std::size_t d = l.dim();
    const PrimeField& f = l.field();
    auto incident = l.incident_entries(p);
    {
        SpanTracker span(f);
        for (std::size_t i : incident) span.try_add(l.entries()[i].line.dir().vec());
        if (span.dim() < d) throw NoJoint();
    }
    std::vector<u64> r = successive_minima(l, p);

    std::vector<Subspace> v;
    v.resize(d, Subspace(f, d, {}));

    auto pick_max_parallel = [&](const std::vector<Subspace>& candidates) -> Subspace {
        const Subspace* best = nullptr;
        u64 best_count = 0;
        for (const Subspace& cand : candidates) {
            u64 c = parallel_count(l, incident, cand);
            if (!best || c > best_count ||
                (c == best_count && cand.flatten() < best->flatten())) {
                best = &cand;
                best_count = c;
            }
        }
        return *best;
    };

    v[d - 1] = pick_max_parallel(minima_candidates(l, p, d - 1));
    for (std::size_t j = d - 1; j >= 1; --j) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < v[j].basis().rows(); ++i) basis.push_back(v[j].basis().row(i));
        v[j - 1] = pick_max_parallel(subspaces_within(f, basis, j - 1));
    }

    Flag flag{p, std::move(v), std::vector<u64>(d, 0)};
    for (std::size_t j = 1; j <= d; ++j) {
        flag.witness_counts[j - 1] = nonparallel_count(l, incident, flag.subspaces[j - 1]);
        if (flag.witness_counts[j - 1] > (d - j + 1) * r[j - 1])
            throw AssertionFailed("flag witness count exceeds (d-j+1) r_j");
    }
    return flag;
}

std::vector<Line> flag_frame_lines(const Flag& flag) {
    const Point& p = flag.anchor;
    const PrimeField& f = p.field;
    const std::size_t d = p.dim();
    std::vector<Line> out;
    out.reserve(d);
    for (std::size_t j = 1; j < d; ++j) {
        const Subspace& vnext = flag.subspaces[j]; // V_{j+1}, dim j
        const Subspace& vcur = flag.subspaces[j - 1];
        Vec dir;
        for (std::size_t i = 0; i < vnext.basis().rows(); ++i) {
            Vec row = vnext.basis().row(i);
            if (!vcur.contains(row)) {
                dir = std::move(row);
                break;
            }
        }
        out.push_back(canonicalize_line(p, dir));
    }
    // Last direction: the lexicographically least canonical vector outside V_d.
    const Subspace& vd = flag.subspaces[d - 1];
    const u64 pm = f.modulus();
    Vec probe(d, 0);
    auto next_vec = [&]() -> bool {
        for (std::size_t i = d; i-- > 0;) {
            if (++probe[i] < pm) return true;
            probe[i] = 0;
        }
        return false;
    };
    while (next_vec()) {
        std::size_t piv = d;
        for (std::size_t i = 0; i < d; ++i)
            if (probe[i] != 0) {
                piv = i;
                break;
            }
        if (piv == d || probe[piv] != 1) continue; // canonical representatives only
        if (!vd.contains(probe)) {
            out.push_back(canonicalize_line(p, probe));
            break;
        }
    }
    if (out.size() != d) throw AssertionFailed("could not complete flag frame");
    return out;
}

JointRecord analyze_point(const LineSystem& l, const Point& p) {
    JointRecord rec{p, joint_multiplicity(l, p), successive_minima(l, p),
                    Flag{p, {}, {}}, {}};
    if (rec.joint_mult > 0) {
        rec.flag = build_flag(l, p);
        rec.frame_lines = flag_frame_lines(rec.flag);
    }
    return rec;
}

LineSystem reduction_system(const LineSystem& l) {
    if (!l.has_families()) throw MissingFamilies();
    const std::size_t d = l.dim();
    std::vector<u64> n(d + 1, 0);
    for (u32 i = 1; i <= d; ++i) n[i] = l.family_size(i);
    std::vector<LineEntry> entries;
    entries.reserve(l.size());
    for (const LineEntry& e : l.entries()) {
        u64 factor = 1;
        for (u32 j = 1; j <= d; ++j)
            if (j != *e.family) factor *= n[j];
        entries.push_back(LineEntry{e.line, e.mult * factor, std::nullopt});
    }
    return LineSystem(l.field(), d, std::move(entries));
}

} // namespace jointkit
