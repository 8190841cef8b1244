#include "gog/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gog::lattice {

namespace {

long long mul_ck(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
}

long long sub_ck(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
}

// a -= q * b
void axpy(Vec& a, long long q, const Vec& b) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = sub_ck(a[i], mul_ck(q, b[i]));
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Hnf hnf(int rows, const std::vector<Vec>& gens) {
    const std::size_t m = gens.size();
    std::vector<Vec> C = gens;
    std::vector<Vec> U(m, Vec(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        if (static_cast<int>(C[j].size()) != rows) throw std::invalid_argument("generator has wrong length");
        U[j][j] = 1;
    }
    Hnf h;
    h.rows = rows;
    std::size_t k = 0;
    for (int r = 0; r < rows && k < m; ++r) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t j = k; j < m; ++j)
                if (C[j][static_cast<std::size_t>(r)] != 0 &&
                    (best == m || std::llabs(C[j][static_cast<std::size_t>(r)]) < std::llabs(C[best][static_cast<std::size_t>(r)])))
                    best = j;
            if (best == m) break;
            std::swap(C[k], C[best]);
            std::swap(U[k], U[best]);
            bool others = false;
            for (std::size_t j = k + 1; j < m; ++j) {
                long long q = C[j][static_cast<std::size_t>(r)] / C[k][static_cast<std::size_t>(r)];
                axpy(C[j], q, C[k]);
                axpy(U[j], q, U[k]);
                others = others || C[j][static_cast<std::size_t>(r)] != 0;
            }
            if (!others) break;
        }
        if (C[k][static_cast<std::size_t>(r)] == 0) continue;
        if (C[k][static_cast<std::size_t>(r)] < 0) {
            for (auto& x : C[k]) x = -x;
            for (auto& x : U[k]) x = -x;
        }
        const long long p = C[k][static_cast<std::size_t>(r)];
        for (std::size_t j = 0; j < k; ++j) {
            long long q = floor_div(C[j][static_cast<std::size_t>(r)], p);
            axpy(C[j], q, C[k]);
            axpy(U[j], q, U[k]);
        }
        h.pivot_row.push_back(r);
        ++k;
    }
    for (std::size_t j = 0; j < k; ++j) {
        h.cols.push_back(C[j]);
        h.coeff.push_back(U[j]);
    }
    for (std::size_t j = k; j < m; ++j) h.kernel.push_back(U[j]);
    return h;
}

std::optional<Vec> solve_in_basis(const Hnf& h, const Vec& x) {
    if (static_cast<int>(x.size()) != h.rows) throw std::invalid_argument("vector has wrong length");
    Vec res = x;
    Vec y(h.cols.size(), 0);
    int row = 0;
    for (std::size_t j = 0; j < h.cols.size(); ++j) {
        const int r = h.pivot_row[j];
        for (; row < r; ++row)
            if (res[static_cast<std::size_t>(row)] != 0) return std::nullopt;
        const long long p = h.cols[j][static_cast<std::size_t>(r)];
        if (res[static_cast<std::size_t>(r)] % p != 0) return std::nullopt;
        y[j] = res[static_cast<std::size_t>(r)] / p;
        axpy(res, y[j], h.cols[j]);
        row = r + 1;
    }
    for (; row < h.rows; ++row)
        if (res[static_cast<std::size_t>(row)] != 0) return std::nullopt;
    return y;
}

std::optional<Vec> solve(const Hnf& h, const Vec& x) {
    auto y = solve_in_basis(h, x);
    if (!y) return std::nullopt;
    const std::size_t m = h.coeff.empty() ? (h.kernel.empty() ? 0 : h.kernel[0].size()) : h.coeff[0].size();
    Vec z(m, 0);
    for (std::size_t j = 0; j < y->size(); ++j) axpy(z, -(*y)[j], h.coeff[j]);
    return z;
}

std::vector<Vec> intersect(int rows, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> stacked;
    for (const auto& v : a) stacked.push_back(v);
    for (const auto& v : b) {
        Vec w = v;
        for (auto& x : w) x = -x;
        stacked.push_back(w);
    }
    Hnf h = hnf(rows, stacked);
    std::vector<Vec> out;
    for (const auto& kv : h.kernel) {
        Vec p(static_cast<std::size_t>(rows), 0);
        for (std::size_t i = 0; i < a.size(); ++i) axpy(p, -kv[i], a[i]);
        if (std::any_of(p.begin(), p.end(), [](long long v) { return v != 0; })) out.push_back(p);
    }
    Hnf c = hnf(rows, out);
    return c.cols;
}

std::vector<long long> smith_diagonal(std::vector<Vec> m) {
    const std::size_t R = m.size();
    const std::size_t C = R ? m[0].size() : 0;
    std::vector<long long> diag;
    std::size_t t = 0;
    while (t < R && t < C) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        std::size_t pr = R, pc = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (m[i][j] != 0 && (pr == R || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == R) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
            long long q = m[i][t] / m[t][t];
            axpy(m[i], q, m[t]);
            clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            long long q = m[t][j] / m[t][t];
            for (std::size_t i = 0; i < R; ++i) m[i][j] = sub_ck(m[i][j], mul_ck(q, m[i][t]));
            clean = clean && m[t][j] == 0;
        }
        if (!clean) continue;
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    divides = false;
                    for (std::size_t k = 0; k < C; ++k) m[t][k] += m[i][k];
                }
        if (!divides) continue;
        diag.push_back(std::llabs(m[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace gog::lattice
