#include "jointkit/matrix.hpp"

#include <algorithm>

namespace jointkit {

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const PrimeField& field, const std::vector<Vec>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw BadParams("ragged rows");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw BadParams("vector length mismatch");
    Vec y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        u64 acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc = field_.add(acc, field_.mul(at(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

namespace {

// Inner elimination kernel. For small p the mod is a table lookup over
// [0, p^2); otherwise a plain %. Row values stay reduced throughout.
struct Reducer {
    u64 p;
    std::vector<u32> table;

    explicit Reducer(u64 p_) : p(p_) {
        if (p <= 1024) {
            table.resize(p * p);
            for (u64 x = 0; x < p * p; ++x) table[x] = static_cast<u32>(x % p);
        }
    }
};

// row_i += m * row_piv over the suffix [from, cols).
void add_multiple(u64* ri, const u64* rp, std::size_t from, std::size_t cols, u64 m,
                  const Reducer& red) {
    if (m == 0) return;
    if (!red.table.empty()) {
        const u32* t = red.table.data();
        for (std::size_t j = from; j < cols; ++j) ri[j] = t[ri[j] + m * rp[j]];
    } else {
        const u64 p = red.p;
        for (std::size_t j = from; j < cols; ++j) ri[j] = (ri[j] + m * rp[j]) % p;
    }
}

} // namespace

Elimination Elimination::run(Matrix m) {
    const PrimeField& f = m.field();
    const std::size_t nr = m.rows(), nc = m.cols();
    Reducer red(f.modulus());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = r;
        while (pr < nr && m.at(pr, c) == 0) ++pr;
        if (pr == nr) continue;
        if (pr != r) {
            for (std::size_t j = c; j < nc; ++j) std::swap(m.at(r, j), m.at(pr, j));
        }
        u64 pinv = f.inv(m.at(r, c));
        if (pinv != 1) {
            for (std::size_t j = c; j < nc; ++j) m.at(r, j) = f.mul(m.at(r, j), pinv);
        }
        u64* rowp = &m.at(r, 0);
        for (std::size_t i = r + 1; i < nr; ++i) {
            u64 v = m.at(i, c);
            if (v == 0) continue;
            add_multiple(&m.at(i, 0), rowp, c, nc, f.neg(v), red);
        }
        pivots.push_back(c);
        ++r;
    }
    return Elimination{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return Elimination::run(m).rank(); }

Vec nullspace_vector(const Matrix& m) {
    if (m.cols() == 0) throw BadParams("matrix must have at least one column");
    Elimination e = Elimination::run(m);
    const std::size_t nc = m.cols();
    if (e.rank() == nc) throw TrivialNullspace();
    const PrimeField& f = m.field();

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    Vec x(nc, 0);
    x[free_col] = 1;
    // Back-substitute pivot variables; pivot entries are 1.
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        std::size_t c = e.pivot_cols[k];
        u64 acc = 0;
        for (std::size_t j = c + 1; j < nc; ++j)
            acc = f.add(acc, f.mul(e.reduced.at(k, j), x[j]));
        x[c] = f.neg(acc);
    }
    return x;
}

Matrix row_space_rref(const Matrix& m) {
    Elimination e = Elimination::run(m);
    const PrimeField& f = m.field();
    Matrix& u = e.reduced;
    const std::size_t nc = m.cols();
    // Clear above each pivot.
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        std::size_t c = e.pivot_cols[k];
        for (std::size_t i = 0; i < k; ++i) {
            u64 v = u.at(i, c);
            if (v == 0) continue;
            u64 mneg = f.neg(v);
            for (std::size_t j = c; j < nc; ++j)
                u.at(i, j) = f.add(u.at(i, j), f.mul(mneg, u.at(k, j)));
        }
    }
    Matrix out(f, e.rank(), nc);
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = u.at(i, j);
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw BadParams("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const PrimeField& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Matrix r = row_space_rref(aug);
    if (r.rows() < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r.at(i, j) != (i == j ? u64{1} : u64{0})) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw BadParams("rhs length mismatch");
    const PrimeField& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = f.reduce(b[i]);
    }
    Elimination e = Elimination::run(std::move(aug));
    for (std::size_t c : e.pivot_cols)
        if (c == m.cols()) return std::nullopt; // pivot in rhs column: inconsistent
    Vec x(m.cols(), 0);
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        std::size_t c = e.pivot_cols[k];
        u64 acc = e.reduced.at(k, m.cols());
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            acc = f.sub(acc, f.mul(e.reduced.at(k, j), x[j]));
        x[c] = acc;
    }
    return x;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw BadParams("matmul shape mismatch");
    const PrimeField& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            u64 v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(k, j)));
        }
    return c;
}

} // namespace jointkit
