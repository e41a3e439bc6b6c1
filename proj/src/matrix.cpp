#include "matrix.hpp"

#include <algorithm>

namespace k3lat {

IntMat identity_mat(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IntVec mat_apply(const IntMat& a, const IntVec& v) {
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

IntMat mat_transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), IntVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RatMat to_rat(const IntMat& a) {
    RatMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) r[i].push_back(Rat(x));
    return r;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat c(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

Int det_bareiss(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rat det_gauss(RatMat a) {
    std::size_t n = a.size();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return d;
}

namespace {

void sym_swap(RatMat& a, std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
}

// add row/col j into row/col i (repairs a zero pivot when a[i][j] != 0)
void sym_add(RatMat& a, std::size_t i, std::size_t j) {
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
    for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
}

} // namespace

RatVec symmetric_diagonalize(RatMat a) {
    std::size_t n = a.size();
    RatVec diag;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][i] != 0) { p = i; break; }
            if (p < n) {
                sym_swap(a, k, p);
            } else {
                std::size_t j = n;
                for (std::size_t i = k + 1; i < n; ++i)
                    if (a[k][i] != 0) { j = i; break; }
                if (j == n) {
                    diag.push_back(Rat(0));
                    continue;
                }
                sym_add(a, k, j);  // pivot becomes 2*a[k][j]
            }
        }
        Rat piv = a[k][k];
        diag.push_back(piv);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = k; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return diag;
}

Inertia symmetric_inertia(RatMat a) {
    Inertia in;
    for (const Rat& d : symmetric_diagonalize(std::move(a))) {
        if (d > 0)
            ++in.pos;
        else if (d < 0)
            ++in.neg;
        else
            ++in.zero;
    }
    return in;
}

RatMat rat_inverse(RatMat a) {
    std::size_t n = a.size();
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        require(p < n, "matrix not invertible");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

SmithResult smith_normal_form(IntMat a) {
    std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    IntMat U = identity_mat(m), V = identity_mat(n);
    auto row_add = [&](std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t c = 0; c < n; ++c) a[i][c] += f * a[j][c];
        for (std::size_t c = 0; c < m; ++c) U[i][c] += f * U[j][c];
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t r = 0; r < m; ++r) a[r][i] += f * a[r][j];
        for (std::size_t r = 0; r < n; ++r) V[r][i] += f * V[r][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(U[i], U[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
    };
    auto row_neg = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : U[i]) x = -x;
    };

    std::size_t t = std::min(m, n);
    for (std::size_t k = 0; k < t; ++k) {
        // move a nonzero pivot of minimal absolute value to (k,k)
        for (;;) {
            std::size_t pi = m, pj = n;
            Int best = 0;
            for (std::size_t i = k; i < m; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == m) goto done;  // rest of matrix zero
            if (pi != k) row_swap(k, pi);
            if (pj != k) col_swap(k, pj);
            if (a[k][k] < 0) row_neg(k);
            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    row_add(i, k, -(a[i][k] / a[k][k]));
                    if (a[i][k] != 0) clean = false;
                }
            for (std::size_t j = k + 1; j < n; ++j)
                if (a[k][j] != 0) {
                    col_add(j, k, -(a[k][j] / a[k][k]));
                    if (a[k][j] != 0) clean = false;
                }
            if (!clean) continue;
            // enforce divisibility on the remaining block
            bool divides = true;
            for (std::size_t i = k + 1; i < m && divides; ++i)
                for (std::size_t j = k + 1; j < n && divides; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        row_add(k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }
done:
    IntVec diag(t, 0);
    for (std::size_t k = 0; k < t; ++k) diag[k] = a[k][k];
    return {diag, U, V};
}

IntMat integer_kernel(const IntMat& a) {
    // kernel of x -> a x. Columns of V matching zero diagonal entries of the
    // SNF of a give a saturated kernel basis.
    std::size_t n = a.empty() ? 0 : a[0].size();
    SmithResult s = smith_normal_form(a);
    IntMat kernel;
    for (std::size_t j = 0; j < n; ++j) {
        bool in_kernel = j >= s.diag.size() || s.diag[j] == 0;
        if (!in_kernel) continue;
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = s.right[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

RatMat lattice_row_basis(const RatMat& rows) {
    if (rows.empty()) return {};
    std::size_t n = rows[0].size();
    // common denominator D, then HNF of integer rows, then divide back
    Int D = 1;
    for (const auto& r : rows)
        for (const auto& x : r) D = D / gcd_int(D, den(x)) * den(x);
    IntMat m;
    for (const auto& r : rows) {
        IntVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = num(r[j]) * (D / den(r[j]));
        m.push_back(std::move(v));
    }
    // integer row-echelon (Hermite) via gcd row operations
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t piv = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            while (m[r][col] != 0) {
                Int q = m[rank][col] / m[r][col];
                for (std::size_t j = 0; j < n; ++j) m[rank][j] -= q * m[r][j];
                std::swap(m[rank], m[r]);
            }
        }
        if (m[rank][col] < 0)
            for (auto& x : m[rank]) x = -x;
        ++rank;
    }
    m.resize(rank);
    RatMat basis(rank, RatVec(n));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < n; ++j) basis[i][j] = Rat(m[i][j]) / Rat(D);
    return basis;
}

} // namespace k3lat
