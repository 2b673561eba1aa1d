#include "ntoric/linalg.hpp"

#include <algorithm>

namespace ntoric {

Int det(const Mat& a)
{
    size_t n = a.size();
    if (n == 0)
        return 1;
    if (a[0].size() != n)
        throw internal_error("det: matrix not square");
    // Bareiss fraction-free elimination.
    Mat m = a;
    Int prev = 1;
    Int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev; // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

size_t rank_of(Mat a)
{
    size_t rows = a.size();
    if (rows == 0)
        return 0;
    size_t cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            // integer row reduction, scale-and-subtract
            Int g;
            mpz_gcd(g.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
            Int fr = a[i][c] / g, fi = a[r][c] / g;
            for (size_t j = 0; j < cols; ++j)
                a[i][j] = fi * a[i][j] - fr * a[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

// Smith-style diagonalization: returns (d, U, V) with U a (rows x rows) and
// V a (cols x cols) unimodular matrix such that U A V = D, where D has the
// pivots d[0..k-1] on the diagonal and zeros elsewhere.
struct Diag {
    std::vector<Int> d;
    Mat u, v;
};

Mat identity(size_t n)
{
    Mat m(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Diag diagonalize(Mat a)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    Diag out;
    out.u = identity(rows);
    out.v = identity(cols);

    auto row_op = [&](size_t i, size_t j, const Int& q) { // row_i -= q row_j
        for (size_t c = 0; c < cols; ++c)
            a[i][c] -= q * a[j][c];
        for (size_t c = 0; c < rows; ++c)
            out.u[i][c] -= q * out.u[j][c];
    };
    auto col_op = [&](size_t i, size_t j, const Int& q) { // col_i -= q col_j
        for (size_t r = 0; r < rows; ++r)
            a[r][i] -= q * a[r][j];
        for (size_t r = 0; r < cols; ++r)
            out.v[r][i] -= q * out.v[r][j];
    };

    size_t k = 0;
    while (k < rows && k < cols) {
        // find a nonzero pivot
        size_t pi = rows, pj = cols;
        for (size_t i = k; i < rows && pi == rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows)
            break;
        if (pi != k) {
            std::swap(a[k], a[pi]);
            std::swap(out.u[k], out.u[pi]);
        }
        if (pj != k) {
            for (size_t r = 0; r < rows; ++r)
                std::swap(a[r][k], a[r][pj]);
            for (size_t r = 0; r < cols; ++r)
                std::swap(out.v[r][k], out.v[r][pj]);
        }
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0)
                    continue;
                Int q = a[i][k] / a[k][k];
                row_op(i, k, q);
                if (a[i][k] != 0) { // remainder swap, Euclid on rows
                    std::swap(a[i], a[k]);
                    std::swap(out.u[i], out.u[k]);
                    again = true;
                }
            }
            for (size_t j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0)
                    continue;
                Int q = a[k][j] / a[k][k];
                col_op(j, k, q);
                if (a[k][j] != 0) {
                    for (size_t r = 0; r < rows; ++r)
                        std::swap(a[r][j], a[r][k]);
                    for (size_t r = 0; r < cols; ++r)
                        std::swap(out.v[r][j], out.v[r][k]);
                    again = true;
                }
            }
        }
        out.d.push_back(a[k][k]);
        ++k;
    }
    return out;
}

} // namespace

std::vector<Vec> kernel_basis(const Mat& a)
{
    if (a.empty())
        return {};
    size_t cols = a[0].size();
    Diag d = diagonalize(a);
    std::vector<Vec> basis;
    for (size_t j = d.d.size(); j < cols; ++j) {
        Vec col(cols);
        for (size_t r = 0; r < cols; ++r)
            col[r] = d.v[r][j];
        basis.push_back(col);
    }
    return basis;
}

std::optional<Vec> solve_integral(const Mat& a, const Vec& b)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    if (rows == 0)
        return Vec(cols, 0);
    Diag d = diagonalize(a);
    // Solve D y = U b, then x = V y.
    Vec ub(rows, 0);
    for (size_t i = 0; i < rows; ++i)
        ub[i] = dot(d.u[i], b);
    Vec y(cols, 0);
    for (size_t i = 0; i < rows; ++i) {
        if (i < d.d.size()) {
            if (ub[i] % d.d[i] != 0)
                return std::nullopt;
            y[i] = ub[i] / d.d[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    Vec x(cols, 0);
    for (size_t r = 0; r < cols; ++r)
        x[r] = dot(d.v[r], y);
    return x;
}

std::optional<QVec> solve_rational(const Mat& a, const QVec& b)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    QMat m(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j)
            m[i][j] = Rat(a[i][j]);
        m[i][cols] = b[i];
    }
    size_t r = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        Rat inv = m[r][c];
        for (size_t j = c; j <= cols; ++j)
            m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (size_t j = c; j <= cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0)
            return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = m[i][cols];
    return x;
}

QVec solve_square(const QMat& a, const QVec& b)
{
    size_t n = a.size();
    QMat m(n, QVec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j];
        m[i][n] = b[i];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw internal_error("solve_square: singular matrix");
        std::swap(m[c], m[p]);
        Rat inv = m[c][c];
        for (size_t j = c; j <= n; ++j)
            m[c][j] /= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (size_t j = c; j <= n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    QVec x(n);
    for (size_t i = 0; i < n; ++i)
        x[i] = m[i][n];
    return x;
}

bool is_negative_definite(const Mat& a)
{
    size_t n = a.size();
    for (size_t k = 1; k <= n; ++k) {
        Mat lead(k, Vec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                lead[i][j] = a[i][j];
        Int dk = det(lead);
        if (k % 2 == 1 ? dk >= 0 : dk <= 0)
            return false;
    }
    return true;
}

} // namespace ntoric
