#include "linalg.hpp"

#include <stdexcept>

namespace qsu2 {

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = ScalarQ(1);
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
    MatQ out(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            const ScalarQ& x = at(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < o.cols; ++c) {
                const ScalarQ& y = o.at(k, c);
                if (!y.is_zero()) out.at(r, c) += x * y;
            }
        }
    return out;
}

MatQ MatQ::operator+(const MatQ& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    MatQ out(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) out.a[k] = a[k] + o.a[k];
    return out;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    MatQ out(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) out.a[k] = a[k] - o.a[k];
    return out;
}

MatQ MatQ::scale(const ScalarQ& c) const {
    MatQ out(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) out.a[k] = a[k] * c;
    return out;
}

bool MatQ::is_zero() const {
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<ScalarQ> MatQ::apply(const std::vector<ScalarQ>& v) const {
    if ((int)v.size() != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<ScalarQ> out(rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

int rank_destructive(MatQ& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        ScalarQ inv = m.at(rank, col).inverse();
        for (int c = col; c < m.cols; ++c) m.at(rank, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            ScalarQ f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<ScalarQ>> kernel_basis(MatQ m) {
    int n = m.cols;
    // Reduce to RREF while recording pivot columns.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        ScalarQ inv = m.at(rank, col).inverse();
        for (int c = col; c < n; ++c) m.at(rank, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            ScalarQ f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<ScalarQ>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ScalarQ> v(n);
        v[free] = ScalarQ(1);
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<ScalarQ>> solve(MatQ A, std::vector<ScalarQ> b) {
    if ((int)b.size() != A.rows) throw std::invalid_argument("solve: shape mismatch");
    int n = A.cols;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < A.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < A.rows; ++r)
            if (!A.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < n; ++c) std::swap(A.at(pivot, c), A.at(rank, c));
            std::swap(b[pivot], b[rank]);
        }
        ScalarQ inv = A.at(rank, col).inverse();
        for (int c = col; c < n; ++c) A.at(rank, c) *= inv;
        b[rank] *= inv;
        for (int r = 0; r < A.rows; ++r) {
            if (r == rank) continue;
            ScalarQ f = A.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c) A.at(r, c) -= f * A.at(rank, c);
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < A.rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<ScalarQ> x(n);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

std::vector<ScalarQ> minimal_polynomial(const MatQ& m) {
    if (m.rows != m.cols) throw std::invalid_argument("minimal_polynomial: square matrix required");
    size_t n2 = m.a.size();
    // Row-reduce flattened powers of m incrementally, tracking combinations.
    std::vector<std::vector<ScalarQ>> rows;   // echelon rows
    std::vector<int> lead;                    // leading index of each row
    std::vector<std::vector<ScalarQ>> combos; // power coefficients per row
    MatQ power = MatQ::identity(m.rows);
    for (int deg = 0;; ++deg) {
        std::vector<ScalarQ> v = power.a;
        std::vector<ScalarQ> combo(deg + 1);
        combo[deg] = ScalarQ(1);
        for (size_t r = 0; r < rows.size(); ++r) {
            const ScalarQ& f = v[lead[r]];
            if (f.is_zero()) continue;
            ScalarQ fac = f; // rows are normalized to leading 1
            for (size_t k = 0; k < n2; ++k)
                if (!rows[r][k].is_zero()) v[k] -= fac * rows[r][k];
            for (size_t k = 0; k < combos[r].size(); ++k)
                combo[k] -= fac * combos[r][k];
        }
        int ld = -1;
        for (size_t k = 0; k < n2; ++k)
            if (!v[k].is_zero()) { ld = (int)k; break; }
        if (ld < 0) {
            // Sum combo[k] M^k = 0 with combo[deg] = 1: that is the minimal
            // polynomial (eliminations only touch lower-degree entries).
            return combo;
        }
        ScalarQ inv = v[ld].inverse();
        for (size_t k = 0; k < n2; ++k)
            if (!v[k].is_zero()) v[k] *= inv;
        for (auto& c : combo) c *= inv;
        rows.push_back(std::move(v));
        lead.push_back(ld);
        combos.push_back(std::move(combo));
        power = power * m;
        if (deg > m.rows) throw std::logic_error("minimal polynomial search exceeded dimension");
    }
}

} // namespace qsu2
