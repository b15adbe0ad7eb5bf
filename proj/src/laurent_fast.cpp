#include "laurent_fast.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsu2 {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentZ coefficient overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentZ coefficient overflow");
    return r;
}

} // namespace

LaurentZ LaurentZ::spow(int e, int64_t coeff) {
    LaurentZ p;
    if (coeff == 0) return p;
    p.lo = e;
    p.c = {coeff};
    return p;
}

LaurentZ LaurentZ::from_q_terms(std::initializer_list<std::pair<int, int64_t>> terms) {
    LaurentZ out;
    for (auto& [qe, co] : terms) out = out + spow(2 * qe, co);
    return out;
}

void LaurentZ::normalize() {
    size_t b = 0, e = c.size();
    while (b < e && c[b] == 0) ++b;
    while (e > b && c[e - 1] == 0) --e;
    if (b == e) {
        c.clear();
        lo = 0;
        return;
    }
    if (b > 0 || e < c.size()) {
        c = std::vector<int64_t>(c.begin() + b, c.begin() + e);
        lo += (int)b;
    }
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int nlo = std::min(lo, o.lo);
    int nhi = std::max(lo + (int)c.size(), o.lo + (int)o.c.size());
    LaurentZ out;
    out.lo = nlo;
    out.c.assign(nhi - nlo, 0);
    for (size_t k = 0; k < c.size(); ++k) out.c[lo - nlo + k] = c[k];
    for (size_t k = 0; k < o.c.size(); ++k)
        out.c[o.lo - nlo + k] = checked_add(out.c[o.lo - nlo + k], o.c[k]);
    out.normalize();
    return out;
}

LaurentZ LaurentZ::operator-() const {
    LaurentZ out = *this;
    for (auto& x : out.c) x = -x;
    return out;
}

LaurentZ LaurentZ::operator-(const LaurentZ& o) const { return *this + (-o); }

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
    LaurentZ out;
    if (is_zero() || o.is_zero()) return out;
    out.lo = lo + o.lo;
    out.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            out.c[i + j] = checked_add(out.c[i + j], checked_mul(c[i], o.c[j]));
        }
    }
    out.normalize();
    return out;
}

ScalarQ LaurentZ::to_scalar() const {
    MPoly p;
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0)
            p.add_term(Monomial::var(VAR_S, lo + (int)k), GausRat(mpq_class((long)c[k])));
    return ScalarQ::from_fraction(std::move(p), MPoly::constant(GausRat(1)));
}

// ---- SpMatZ -------------------------------------------------------------------

SpMatZ SpMatZ::identity(int n) {
    SpMatZ m(n, n);
    for (int k = 0; k < n; ++k) m.row[k].push_back({k, LaurentZ::one()});
    return m;
}

void SpMatZ::set(int r, int c, LaurentZ v) {
    auto& rw = row.at(r);
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != rw.end() && it->first == c) {
        if (v.is_zero()) rw.erase(it);
        else it->second = std::move(v);
    } else if (!v.is_zero()) {
        rw.insert(it, {c, std::move(v)});
    }
}

const LaurentZ* SpMatZ::get(int r, int c) const {
    auto& rw = row.at(r);
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != rw.end() && it->first == c) return &it->second;
    return nullptr;
}

SpMatZ SpMatZ::operator*(const SpMatZ& o) const {
    if (cols != o.rows) throw std::invalid_argument("sparse matrix shape mismatch");
    SpMatZ out(rows, o.cols);
    std::vector<LaurentZ> acc(o.cols);
    std::vector<bool> used(o.cols, false);
    std::vector<int> touched;
    for (int r = 0; r < rows; ++r) {
        touched.clear();
        for (auto& [k, x] : row[r]) {
            for (auto& [c, y] : o.row[k]) {
                if (!used[c]) {
                    used[c] = true;
                    touched.push_back(c);
                    acc[c] = x * y;
                } else {
                    acc[c] = acc[c] + x * y;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int c : touched) {
            if (!acc[c].is_zero()) out.row[r].push_back({c, std::move(acc[c])});
            used[c] = false;
            acc[c] = LaurentZ();
        }
    }
    return out;
}

SpMatZ SpMatZ::operator+(const SpMatZ& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("sparse matrix shape mismatch");
    SpMatZ out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        auto& A = row[r];
        auto& B = o.row[r];
        size_t i = 0, j = 0;
        while (i < A.size() || j < B.size()) {
            if (j == B.size() || (i < A.size() && A[i].first < B[j].first)) {
                out.row[r].push_back(A[i++]);
            } else if (i == A.size() || B[j].first < A[i].first) {
                out.row[r].push_back(B[j++]);
            } else {
                LaurentZ v = A[i].second + B[j].second;
                if (!v.is_zero()) out.row[r].push_back({A[i].first, std::move(v)});
                ++i; ++j;
            }
        }
    }
    return out;
}

SpMatZ SpMatZ::operator-(const SpMatZ& o) const {
    SpMatZ neg = o;
    for (auto& rw : neg.row)
        for (auto& [c, v] : rw) v = -v;
    return *this + neg;
}

SpMatZ SpMatZ::kron(const SpMatZ& o) const {
    SpMatZ out(rows * o.rows, cols * o.cols);
    for (int r1 = 0; r1 < rows; ++r1)
        for (auto& [c1, v1] : row[r1])
            for (int r2 = 0; r2 < o.rows; ++r2) {
                auto& orow = out.row[r1 * o.rows + r2];
                for (auto& [c2, v2] : o.row[r2])
                    orow.push_back({c1 * o.cols + c2, v1 * v2});
            }
    for (auto& rw : out.row)
        std::sort(rw.begin(), rw.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool SpMatZ::is_zero() const {
    for (auto& rw : row)
        if (!rw.empty()) return false;
    return true;
}

bool SpMatZ::operator==(const SpMatZ& o) const {
    return rows == o.rows && cols == o.cols && (*this - o).is_zero();
}

size_t SpMatZ::nnz() const {
    size_t n = 0;
    for (auto& rw : row) n += rw.size();
    return n;
}

std::vector<LaurentZ> SpMatZ::apply(const std::vector<LaurentZ>& v) const {
    if ((int)v.size() != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<LaurentZ> out(rows);
    for (int r = 0; r < rows; ++r)
        for (auto& [c, x] : row[r])
            if (!v[c].is_zero()) out[r] = out[r] + x * v[c];
    return out;
}

MatQ SpMatZ::to_matq() const {
    MatQ out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (auto& [c, v] : row[r]) out.at(r, c) = v.to_scalar();
    return out;
}

} // namespace qsu2
