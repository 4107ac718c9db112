#include "jointkit/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace jointkit {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string exps_str(const std::vector<u32>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

struct FastMod {
    u64 p;
    std::vector<u32> table;
    explicit FastMod(u64 p_) : p(p_) {
        if (p <= 1024) {
            table.resize(p * p + p);
            for (u64 x = 0; x < table.size(); ++x) table[x] = static_cast<u32>(x % p);
        }
    }
    u64 operator()(u64 x) const { return table.empty() ? x % p : table[x]; }
};

// Little-endian multiword unsigned integer, just big enough for the exact
// powered threshold comparisons.
struct BigUint {
    std::vector<u64> limbs; // no trailing zero limbs; empty means 0

    static BigUint from(u64 x) {
        BigUint b;
        if (x) b.limbs.push_back(x);
        return b;
    }

    void mul_u64(u64 m) {
        if (m == 0 || limbs.empty()) {
            limbs.clear();
            return;
        }
        unsigned __int128 carry = 0;
        for (u64& l : limbs) {
            unsigned __int128 cur = static_cast<unsigned __int128>(l) * m + carry;
            l = static_cast<u64>(cur);
            carry = cur >> 64;
        }
        if (carry) limbs.push_back(static_cast<u64>(carry));
    }

    BigUint operator*(const BigUint& o) const {
        BigUint r;
        if (limbs.empty() || o.limbs.empty()) return r;
        r.limbs.assign(limbs.size() + o.limbs.size(), 0);
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < o.limbs.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(limbs[i]) * o.limbs[j] +
                                        r.limbs[i + j] + carry;
                r.limbs[i + j] = static_cast<u64>(cur);
                carry = cur >> 64;
            }
            r.limbs[i + o.limbs.size()] += static_cast<u64>(carry);
        }
        while (!r.limbs.empty() && r.limbs.back() == 0) r.limbs.pop_back();
        return r;
    }

    static BigUint power(u64 base, std::size_t e) {
        BigUint r = from(1);
        for (std::size_t i = 0; i < e; ++i) r.mul_u64(base);
        return r;
    }

    static int cmp(const BigUint& a, const BigUint& b) {
        if (a.limbs.size() != b.limbs.size())
            return a.limbs.size() < b.limbs.size() ? -1 : 1;
        for (std::size_t i = a.limbs.size(); i-- > 0;) {
            if (a.limbs[i] != b.limbs[i]) return a.limbs[i] < b.limbs[i] ? -1 : 1;
        }
        return 0;
    }
};

bool threshold_holds(u64 beta, std::size_t j, u64 b, const std::vector<u64>& r, u64 growth) {
    const std::size_t d = r.size();
    if (j < 1 || j > d) throw BadParams("axis index out of range");
    for (u64 rk : r)
        if (rk == 0) throw BadParams("all r_k must be >= 1");
    BigUint lhs = BigUint::power(beta, d - 1);
    BigUint prod = BigUint::from(1);
    for (u64 rk : r) prod.mul_u64(rk);
    BigUint prod_pow = BigUint::from(1);
    for (std::size_t i = 0; i + 2 < d; ++i) prod_pow = prod_pow * prod; // (prod r)^(d-2)
    lhs = lhs * prod_pow;

    BigUint base = BigUint::power(growth, j);
    base.mul_u64(b);
    for (std::size_t k = 0; k < d; ++k)
        if (k + 1 != j) base.mul_u64(r[k]);
    BigUint rhs = BigUint::from(1);
    for (std::size_t i = 0; i + 1 < d; ++i) rhs = rhs * base; // base^(d-1)
    return BigUint::cmp(lhs, rhs) <= 0;
}

} // namespace

u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > ~u64{0}) throw BadParams("binomial overflow");
    }
    return static_cast<u64>(r);
}

u64 min_degree_for(u64 count, std::size_t d) {
    for (u64 deg = 0;; ++deg) {
        if (binomial(deg + d, d) > count) return deg;
    }
}

MonomialTable::MonomialTable(std::size_t d, u64 max_degree) : d_(d), max_deg_(max_degree) {
    offsets_.assign(max_degree + 2, 0);
    std::vector<u32> exps(d, 0);
    for (u64 t = 0; t <= max_degree; ++t) {
        offsets_[t] = mons_.size();
        // Degree-t exponent vectors in descending lexicographic order.
        auto rec = [&](auto&& self, std::size_t pos, u64 remaining) -> void {
            if (pos + 1 == d) {
                exps[pos] = static_cast<u32>(remaining);
                mons_.push_back(Monomial(exps));
                return;
            }
            for (u64 e = remaining + 1; e-- > 0;) {
                exps[pos] = static_cast<u32>(e);
                self(self, pos + 1, remaining - e);
            }
        };
        rec(rec, 0, t);
    }
    offsets_[max_degree + 1] = mons_.size();

    u64 radix = max_degree + 1;
    u64 keyspace = 1;
    for (std::size_t i = 0; i < d; ++i) keyspace *= radix;
    key_to_index_.assign(keyspace, ~u32{0});
    for (std::size_t i = 0; i < mons_.size(); ++i)
        key_to_index_[key_of(mons_[i].exps)] = static_cast<u32>(i);

    std::size_t shift_count = offsets_[max_degree]; // monomials of degree < max_degree
    shift_.assign(shift_count * d, ~u32{0});
    std::vector<u32> probe(d);
    for (std::size_t i = 0; i < shift_count; ++i) {
        for (std::size_t v = 0; v < d; ++v) {
            probe = mons_[i].exps;
            probe[v] += 1;
            shift_[i * d + v] = key_to_index_[key_of(probe)];
        }
    }
}

std::size_t MonomialTable::key_of(const std::vector<u32>& exps) const {
    u64 radix = max_deg_ + 1;
    u64 key = 0;
    for (std::size_t i = 0; i < d_; ++i) key = key * radix + exps[i];
    return key;
}

bool MonomialTable::in_range(const std::vector<u32>& exps) const {
    u64 t = 0;
    for (u32 e : exps) t += e;
    return t <= max_deg_;
}

std::size_t MonomialTable::index_of(const std::vector<u32>& exps) const {
    if (!in_range(exps)) throw BadParams("monomial outside table range");
    return key_to_index_[key_of(exps)];
}

namespace {

std::vector<LinearForm> inverse_coordinate_forms(const AffineMap& t) {
    AffineMap tinv = t.inverse();
    std::vector<LinearForm> forms(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
        forms[i].coeffs = tinv.linear().row(i);
        forms[i].constant = tinv.shift()[i];
    }
    return forms;
}

/// Stream the pullback images of every basis monomial in graded order.
/// fn(index, image): image[k] is the coefficient of table monomial k, valid
/// for k < degree_offset(deg+1).
template <typename Fn>
void stream_images(const MonomialTable& tab, const PrimeField& f,
                   const std::vector<LinearForm>& forms, Fn&& fn) {
    const std::size_t d = tab.d();
    const u64 dmax = tab.max_degree();
    FastMod fm(f.modulus());

    std::vector<std::vector<u64>> prev;
    {
        std::vector<u64> img{1};
        fn(std::size_t{0}, img);
        prev.push_back(std::move(img));
    }
    for (u64 t = 1; t <= dmax; ++t) {
        const std::size_t begin = tab.degree_offset(t);
        const std::size_t end = tab.degree_offset(t + 1);
        const std::size_t prev_begin = tab.degree_offset(t - 1);
        std::vector<std::vector<u64>> cur(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            const Monomial& m = tab.at(i);
            std::size_t v = 0;
            while (m.exps[v] == 0) ++v;
            std::vector<u32> pexps = m.exps;
            pexps[v] -= 1;
            const std::vector<u64>& pim = prev[tab.index_of(pexps) - prev_begin];
            std::vector<u64> img(end, 0);
            const LinearForm& lf = forms[v];
            for (std::size_t jj = 0; jj < pim.size(); ++jj) {
                u64 val = pim[jj];
                if (val == 0) continue;
                if (lf.constant) img[jj] = fm(img[jj] + val * lf.constant);
                for (std::size_t k = 0; k < d; ++k) {
                    u64 ck = lf.coeffs[k];
                    if (ck == 0) continue;
                    std::size_t target = tab.shifted(jj, k);
                    img[target] = fm(img[target] + val * ck);
                }
            }
            fn(i, img);
            cur[i - begin] = std::move(img);
        }
        prev = std::move(cur);
    }
}

} // namespace

SparsePoly pullback_dense(const SparsePoly& q, const AffineMap& t, const MonomialTable& tab) {
    if (q.total_degree() > static_cast<i64>(tab.max_degree()))
        throw BadParams("polynomial degree exceeds table range");
    const PrimeField& f = q.field();
    std::vector<u64> qc(tab.size(), 0);
    for (const auto& [m, c] : q.terms()) qc[tab.index_of(m.exps)] = c;

    std::vector<u64> acc(tab.size(), 0);
    FastMod fm(f.modulus());
    auto forms = inverse_coordinate_forms(t);
    stream_images(tab, f, forms, [&](std::size_t idx, const std::vector<u64>& img) {
        u64 c = qc[idx];
        if (c == 0) return;
        for (std::size_t k = 0; k < img.size(); ++k)
            if (img[k]) acc[k] = fm(acc[k] + c * img[k]);
    });

    SparsePoly out(f, q.dim());
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k]) out.add_term(tab.at(k), acc[k]);
    return out;
}

ConstraintSystem vanishing_constraints(const PrimeField& field, std::size_t d,
                                       const std::vector<Point>& points, u64 degree_bound) {
    MonomialTable tab(d, degree_bound);
    ConstraintSystem cs{field, d, degree_bound, tab.size(), {}};
    for (const Point& p : points) {
        // Monomial values at p, built along the graded predecessor chain.
        std::vector<u64> val(tab.size(), 0);
        val[0] = 1;
        for (std::size_t i = 1; i < tab.size(); ++i) {
            const Monomial& m = tab.at(i);
            std::size_t v = 0;
            while (m.exps[v] == 0) ++v;
            std::vector<u32> pexps = m.exps;
            pexps[v] -= 1;
            val[i] = field.mul(val[tab.index_of(pexps)], p.coords[v]);
        }
        ConstraintRow row;
        row.tag = "vanish@" + vec_str(p.coords);
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (val[i]) row.entries.emplace_back(static_cast<u32>(i), val[i]);
        cs.rows.push_back(std::move(row));
    }
    return cs;
}

namespace {

std::vector<std::vector<u32>> box_betas(const std::vector<u64>& limits) {
    std::vector<std::vector<u32>> out;
    std::vector<u32> beta(limits.size(), 0);
    while (true) {
        out.push_back(beta);
        std::size_t i = limits.size();
        while (i-- > 0) {
            if (beta[i] < limits[i]) {
                ++beta[i];
                std::fill(beta.begin() + static_cast<std::ptrdiff_t>(i) + 1, beta.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
    }
}

ConstraintSystem kill_constraints(const PrimeField& field, std::size_t d,
                                  const std::vector<KillBox>& boxes, u64 degree_bound) {
    MonomialTable tab(d, degree_bound);
    u64 total_rows = 0;
    for (const KillBox& b : boxes) total_rows += b.row_count;
    if (tab.size() <= total_rows) throw DegreeTooSmall();

    ConstraintSystem cs{field, d, degree_bound, tab.size(), {}};
    for (const KillBox& box : boxes) {
        auto betas = box_betas(box.limits);
        // Target index per beta; betas of degree > D have no coefficient at all.
        std::vector<std::size_t> target(betas.size(), ~std::size_t{0});
        for (std::size_t k = 0; k < betas.size(); ++k)
            if (tab.in_range(betas[k])) target[k] = tab.index_of(betas[k]);

        std::vector<std::vector<u64>> block(betas.size(), std::vector<u64>(tab.size(), 0));
        auto forms = inverse_coordinate_forms(box.transform);
        stream_images(tab, field, forms, [&](std::size_t idx, const std::vector<u64>& img) {
            for (std::size_t k = 0; k < betas.size(); ++k) {
                std::size_t ti = target[k];
                if (ti < img.size() && img[ti]) block[k][idx] = img[ti];
            }
        });
        for (std::size_t k = 0; k < betas.size(); ++k) {
            ConstraintRow row;
            row.tag = "kill@" + vec_str(box.point.coords) + " beta=" + exps_str(betas[k]);
            for (std::size_t i = 0; i < tab.size(); ++i)
                if (block[k][i]) row.entries.emplace_back(static_cast<u32>(i), block[k][i]);
            cs.rows.push_back(std::move(row));
        }
    }
    return cs;
}

} // namespace

ConstraintSystem box_kill_constraints(const std::vector<PointFrame>& frames,
                                      const std::vector<u64>& bounds, u64 degree_bound) {
    if (frames.empty()) {
        PrimeField f(2); // unused; empty systems need a field only formally
        MonomialTable tab(bounds.size(), degree_bound);
        return ConstraintSystem{f, bounds.size(), degree_bound, tab.size(), {}};
    }
    const PrimeField& f = frames.front().point.field;
    const std::size_t d = frames.front().point.dim();
    if (bounds.size() != d) throw BadParams("bounds dimension mismatch");
    u64 rows_per_point = 1;
    for (u64 b : bounds) rows_per_point *= b + 1;
    std::vector<KillBox> boxes;
    boxes.reserve(frames.size());
    for (const PointFrame& fr : frames) {
        if (!is_zero_vec(fr.transform.apply(fr.point.coords)))
            throw BadParams("frame does not send its point to the origin");
        boxes.push_back(KillBox{fr.point, fr.transform, bounds, rows_per_point});
    }
    return kill_constraints(f, d, boxes, degree_bound);
}

bool threshold_compare(u64 beta, std::size_t j, u64 b, const std::vector<u64>& r) {
    return threshold_holds(beta, j, b, r, 100);
}

u64 axis_kill_limit(std::size_t j, const std::vector<u64>& r, const ThresholdOptions& opt) {
    if (opt.b == 0) throw BadParams("B must be positive");
    if (opt.growth == 0) throw BadParams("growth base must be positive");
    if (opt.floor > opt.row_budget)
        throw InfeasibleThresholds("floor exceeds row budget");
    if (threshold_holds(opt.row_budget + 1, j, opt.b, r, opt.growth))
        throw InfeasibleThresholds("axis " + std::to_string(j) + " limit exceeds row budget");
    u64 lo = 0, hi = opt.row_budget + 1; // lo holds, hi fails
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        if (threshold_holds(mid, j, opt.b, r, opt.growth))
            lo = mid;
        else
            hi = mid;
    }
    return std::max(opt.floor, lo);
}

KillBox make_kill_box(const JointRecord& record, const ThresholdOptions& opt) {
    const std::size_t d = record.point.dim();
    if (record.frame_lines.size() != d) throw BadParams("record lacks a complete frame");
    AffineMap t = frame_transform(record.point, record.frame_lines);
    std::vector<u64> limits(d);
    u64 rows = 1;
    for (std::size_t j = 1; j <= d; ++j) {
        limits[j - 1] = axis_kill_limit(j, record.minima, opt);
        unsigned __int128 next = static_cast<unsigned __int128>(rows) * (limits[j - 1] + 1);
        if (next > opt.row_budget)
            throw InfeasibleThresholds("kill box at " + vec_str(record.point.coords) +
                                       " exceeds row budget");
        rows = static_cast<u64>(next);
    }
    return KillBox{record.point, std::move(t), std::move(limits), rows};
}

ConstraintSystem weighted_kill_constraints(const std::vector<JointRecord>& records,
                                           const ThresholdOptions& opt, u64 degree_bound,
                                           std::vector<KillBox>* boxes_out) {
    if (records.empty()) {
        PrimeField f(2);
        return ConstraintSystem{f, 0, degree_bound, 0, {}};
    }
    const PrimeField& f = records.front().point.field;
    const std::size_t d = records.front().point.dim();
    std::vector<KillBox> boxes;
    u64 total = 0;
    for (const JointRecord& rec : records) {
        boxes.push_back(make_kill_box(rec, opt));
        total += boxes.back().row_count;
        if (total > opt.row_budget)
            throw InfeasibleThresholds("total row count exceeds row budget");
    }
    ConstraintSystem cs = kill_constraints(f, d, boxes, degree_bound);
    if (boxes_out) *boxes_out = std::move(boxes);
    return cs;
}

Certificate solve_certificate(ConstraintSystem cs) {
    MonomialTable tab(cs.d, cs.degree_bound);
    Matrix m(cs.field, cs.rows.size(), cs.unknowns);
    for (std::size_t r = 0; r < cs.rows.size(); ++r)
        for (const auto& [col, val] : cs.rows[r].entries) m.at(r, col) = val;
    Vec coeffs = nullspace_vector(m);

    SparsePoly q(cs.field, cs.d);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i]) q.add_term(tab.at(i), coeffs[i]);
    if (q.is_zero()) throw AssertionFailed("nullspace produced the zero polynomial");

    // Re-substitution: every row must vanish on the certificate's coefficients.
    for (const ConstraintRow& row : cs.rows) {
        u64 acc = 0;
        for (const auto& [col, val] : row.entries)
            acc = cs.field.add(acc, cs.field.mul(val, coeffs[col]));
        if (acc != 0) throw AssertionFailed("certificate violates its own system: " + row.tag);
    }
    return Certificate{std::move(q), std::move(cs)};
}

bool ProofTrace::passed() const {
    for (const TraceCheck& c : checks)
        if (!c.ok) return false;
    return true;
}

void ProofTrace::require(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(TraceCheck{name, ok, detail});
}

ProofTrace joints_proof_trace(const LineSystem& l) {
    ProofTrace tr;
    tr.theorem = "joints";
    tr.line_count = l.total_multiplicity();
    const std::size_t d = l.dim();

    std::vector<Point> joints = find_joints(l);
    tr.joint_count = joints.size();
    tr.degree_bound = min_degree_for(joints.size(), d);

    ConstraintSystem cs = vanishing_constraints(l.field(), d, joints, tr.degree_bound);
    Certificate cert = solve_certificate(cs);
    const SparsePoly& q = cert.q;
    tr.certificate_degree = q.total_degree();
    tr.require("certificate_degree_within_bound",
               tr.certificate_degree <= static_cast<i64>(tr.degree_bound));

    bool vanishes = true;
    for (const Point& p : joints)
        if (q.eval(p) != 0) vanishes = false;
    tr.require("certificate_vanishes_on_joints", vanishes);

    std::set<Line> distinct;
    for (const LineEntry& e : l.entries()) distinct.insert(e.line);

    std::map<Line, u64> special_per_line;
    bool all_special_somewhere = true;
    for (const Point& p : joints) {
        bool found = false;
        std::string witness;
        for (const Line& ln : distinct) {
            if (!line_contains(ln, p)) continue;
            if (classify_joint(q, p, ln) == JointClass::Special) {
                ++special_per_line[ln];
                if (!found) witness = "special on line via " + vec_str(ln.dir().vec());
                found = true;
            }
        }
        if (!found) all_special_somewhere = false;
        tr.verdicts.push_back(PointVerdict{p.coords, found ? witness : "no special line"});
    }
    tr.require("every_joint_special_on_some_line", all_special_somewhere);

    bool per_line_ok = true;
    for (const auto& [ln, cnt] : special_per_line) {
        if (static_cast<i64>(cnt) > tr.certificate_degree) per_line_ok = false;
        tr.tallies.emplace_back("special@dir" + vec_str(ln.dir().vec()) + "base" +
                                    vec_str(ln.base().coords),
                                cnt);
    }
    tr.require("per_line_special_count_at_most_degree", per_line_ok);

    u64 deg = tr.certificate_degree < 0 ? 0 : static_cast<u64>(tr.certificate_degree);
    tr.require("joint_count_at_most_N_degQ", tr.joint_count <= tr.line_count * deg ||
                                                 tr.joint_count == 0,
               std::to_string(tr.joint_count) + " <= " + std::to_string(tr.line_count) + "*" +
                   std::to_string(deg));
    return tr;
}

ProofTrace multijoints_proof_trace(const LineSystem& l) {
    if (!l.has_families()) throw MissingFamilies();
    ProofTrace tr;
    tr.theorem = "multijoints";
    tr.line_count = l.total_multiplicity();
    const std::size_t d = l.dim();
    const PrimeField& f = l.field();

    std::vector<Point> multijoints;
    for (const Point& p : find_joints(l))
        if (multijoint_multiplicity(l, p) > 0) multijoints.push_back(p);
    tr.joint_count = multijoints.size();
    if (multijoints.empty()) {
        tr.require("vacuous_no_multijoints", true);
        return tr;
    }

    std::vector<u64> family_sizes(d);
    for (u32 i = 1; i <= d; ++i) family_sizes[i - 1] = l.family_size(i);

    // Deterministic transversal per multijoint: first independent tuple in
    // family order over sorted family lines.
    std::vector<std::vector<Line>> chosen(multijoints.size());
    for (std::size_t pi = 0; pi < multijoints.size(); ++pi) {
        const Point& p = multijoints[pi];
        std::vector<std::vector<Line>> fam_lines(d);
        for (const LineEntry& e : l.entries())
            if (line_contains(e.line, p)) fam_lines[*e.family - 1].push_back(e.line);
        for (auto& v : fam_lines) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
        std::vector<Line> pick;
        std::vector<Vec> dirs;
        auto rec = [&](auto&& self, std::size_t fam) -> bool {
            if (fam == d) return true;
            for (const Line& ln : fam_lines[fam]) {
                dirs.push_back(ln.dir().vec());
                if (rank(Matrix::from_rows(f, dirs)) == dirs.size()) {
                    pick.push_back(ln);
                    if (self(self, fam + 1)) return true;
                    pick.pop_back();
                }
                dirs.pop_back();
            }
            return false;
        };
        if (!rec(rec, 0)) throw AssertionFailed("no independent family tuple at a multijoint");
        chosen[pi] = std::move(pick);
    }

    u64 rows_per_point = 1;
    for (u64 n : family_sizes) rows_per_point *= n + 1;
    tr.degree_bound = min_degree_for(tr.joint_count * rows_per_point, d);

    std::vector<PointFrame> frames;
    for (std::size_t pi = 0; pi < multijoints.size(); ++pi)
        frames.push_back(PointFrame{multijoints[pi], frame_transform(multijoints[pi], chosen[pi])});
    ConstraintSystem cs = box_kill_constraints(frames, family_sizes, tr.degree_bound);
    Certificate cert = solve_certificate(cs);
    const SparsePoly& q = cert.q;
    tr.certificate_degree = q.total_degree();
    tr.require("certificate_degree_within_bound",
               tr.certificate_degree <= static_cast<i64>(tr.degree_bound));

    MonomialTable tab(d, tr.degree_bound);
    std::vector<std::size_t> type_of(multijoints.size(), 0); // 1-based
    std::vector<u64> type_tally(d + 1, 0);
    bool boxes_empty = true, types_ok = true, routes_agree = true;
    for (std::size_t pi = 0; pi < multijoints.size(); ++pi) {
        SparsePoly r = pullback_dense(q, frames[pi].transform, tab);
        for (const auto& beta : box_betas(family_sizes)) {
            if (!tab.in_range(beta)) continue;
            if (r.coeff(Monomial(beta)) != 0) boxes_empty = false;
        }
        // First minimal-total-degree term in canonical order.
        const Monomial& lead = r.terms().begin()->first;
        std::size_t type = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (lead.exps[i] > family_sizes[i]) {
                type = i + 1;
                break;
            }
        if (type == 0) {
            types_ok = false;
            tr.verdicts.push_back(PointVerdict{multijoints[pi].coords, "no type found"});
            continue;
        }
        type_of[pi] = type;
        ++type_tally[type];
        u64 beta_i = lead.exps[type - 1];
        // Monomial lower bound route vs the direct computation.
        u64 route_bound = expansion_lower_bound(r, 0, type - 1);
        u64 direct = pl_multiplicity(q, multijoints[pi], chosen[pi][type - 1]).value;
        if (route_bound < beta_i || direct < beta_i) routes_agree = false;
        if (beta_i <= family_sizes[type - 1]) types_ok = false;
        tr.verdicts.push_back(PointVerdict{
            multijoints[pi].coords, "type " + std::to_string(type) + " beta=" +
                                        exps_str(lead.exps) + " m=" + std::to_string(direct)});
    }
    tr.require("killbox_empty_at_every_multijoint", boxes_empty);
    tr.require("every_multijoint_typed_with_m_exceeding_family_size", types_ok);
    tr.require("lower_bound_route_agrees_with_direct_multiplicity", routes_agree);

    for (std::size_t i = 1; i <= d; ++i)
        tr.tallies.emplace_back("type_" + std::to_string(i), type_tally[i]);
    std::size_t popular = 1;
    for (std::size_t i = 2; i <= d; ++i)
        if (type_tally[i] > type_tally[popular]) popular = i;
    tr.require("pigeonhole_popular_type",
               d * type_tally[popular] >= tr.joint_count,
               "type " + std::to_string(popular) + " covers " +
                   std::to_string(type_tally[popular]) + " of " +
                   std::to_string(tr.joint_count));

    // Final chain through the Bezout-type inequality, grouped per chosen line.
    std::map<Line, u64> sum_on_line;
    u64 total_m = 0;
    for (std::size_t pi = 0; pi < multijoints.size(); ++pi) {
        const Line& ln = chosen[pi][popular - 1];
        u64 m = pl_multiplicity(q, multijoints[pi], ln).value;
        sum_on_line[ln] += m;
        total_m += m;
    }
    bool grouped_ok = true;
    for (const auto& [ln, s] : sum_on_line)
        if (s > bezout_sum(q, ln)) grouped_ok = false;
    tr.require("per_line_sum_bounded_by_bezout", grouped_ok);

    u64 n_pop = family_sizes[popular - 1];
    u64 deg = tr.certificate_degree < 0 ? 0 : static_cast<u64>(tr.certificate_degree);
    tr.require("final_chain", tr.joint_count * n_pop <= d * total_m && total_m <= n_pop * deg,
               std::to_string(tr.joint_count) + "*" + std::to_string(n_pop) +
                   " <= " + std::to_string(d) + "*" + std::to_string(total_m) +
                   " and sum <= " + std::to_string(n_pop) + "*" + std::to_string(deg));
    return tr;
}

CarberyAudit carbery_audit(const LineSystem& l, const ThresholdOptions& opt) {
    if (opt.b == 0) throw BadParams("B must be positive");
    CarberyAudit audit;
    audit.options = opt;
    ProofTrace& tr = audit.trace;
    tr.theorem = "carbery";
    tr.line_count = l.total_multiplicity();
    const std::size_t d = l.dim();
    const PrimeField& f = l.field();

    std::vector<Point> joints = find_joints(l);
    tr.joint_count = joints.size();
    if (joints.empty()) {
        tr.require("vacuous_no_joints", true);
        return audit;
    }

    std::vector<JointRecord> records;
    records.reserve(joints.size());
    for (const Point& p : joints) records.push_back(analyze_point(l, p));

    std::vector<KillBox> boxes;
    {
        u64 total_rows = 0;
        for (const JointRecord& rec : records) {
            boxes.push_back(make_kill_box(rec, opt));
            total_rows += boxes.back().row_count;
            if (total_rows > opt.row_budget)
                throw InfeasibleThresholds("total row count exceeds row budget");
        }
        tr.degree_bound = min_degree_for(total_rows, d);
    }
    ConstraintSystem cs = kill_constraints(f, d, boxes, tr.degree_bound);
    Certificate cert = solve_certificate(cs);
    const SparsePoly& q = cert.q;
    tr.certificate_degree = q.total_degree();
    tr.require("certificate_degree_within_bound",
               tr.certificate_degree <= static_cast<i64>(tr.degree_bound));

    // Hard check 1: the kill box is formally empty at every joint.
    MonomialTable tab(d, tr.degree_bound);
    bool boxes_empty = true;
    for (const KillBox& box : boxes) {
        SparsePoly r = pullback_dense(q, box.transform, tab);
        for (const auto& beta : box_betas(box.limits)) {
            if (!tab.in_range(beta)) continue;
            if (r.coeff(Monomial(beta)) != 0) boxes_empty = false;
        }
    }
    tr.require("killbox_empty_at_every_joint", boxes_empty);

    // Hard check 2: the closing chain. Summing the per-line Bezout bound over
    // the whole multiset is at most N deg Q.
    std::map<Line, LineRestriction> restrictions;
    for (const LineEntry& e : l.entries())
        if (!restrictions.count(e.line)) restrictions.emplace(e.line, LineRestriction(q, e.line));
    u64 total_sum = 0;
    const u64 pm = f.modulus();
    for (const LineEntry& e : l.entries()) {
        const LineRestriction& lr = restrictions.at(e.line);
        u64 s = 0;
        for (u64 t = 0; t < pm; ++t) s += lr.value_at_param(t);
        total_sum += e.mult * s;
    }
    audit.total_multiplicity_sum = total_sum;
    u64 deg = tr.certificate_degree < 0 ? 0 : static_cast<u64>(tr.certificate_degree);
    audit.degree_cap = tr.line_count * deg;
    tr.require("bezout_chain_total_at_most_N_degQ", total_sum <= audit.degree_cap,
               std::to_string(total_sum) + " <= " + std::to_string(audit.degree_cap));

    // Reported metrics: the key estimate's ratio per point and globally.
    double global_num = 0.0;
    for (std::size_t pi = 0; pi < records.size(); ++pi) {
        const JointRecord& rec = records[pi];
        u64 sum_m = 0;
        for (const LineEntry& e : l.entries()) {
            if (!line_contains(e.line, rec.point)) continue;
            sum_m += e.mult * restrictions.at(e.line).value_at(rec.point);
        }
        double mpow = std::pow(static_cast<double>(rec.joint_mult), 1.0 / (d - 1));
        global_num += mpow;
        CarberyPointReport pr;
        pr.coords = rec.point.coords;
        pr.joint_mult = rec.joint_mult;
        pr.minima = rec.minima;
        pr.limits = boxes[pi].limits;
        pr.sum_m = sum_m;
        pr.ratio = static_cast<double>(sum_m) / (static_cast<double>(opt.b) * mpow);
        audit.points.push_back(std::move(pr));
        tr.verdicts.push_back(PointVerdict{rec.point.coords,
                                           "M=" + std::to_string(rec.joint_mult) +
                                               " sum_m=" + std::to_string(sum_m)});
    }
    double n = static_cast<double>(tr.line_count);
    audit.global_ratio = global_num / std::pow(n, static_cast<double>(d) / (d - 1));
    return audit;
}

} // namespace jointkit
