#include "gaussian.hpp"

namespace k3lat {

namespace {

// signed pair basis of Lambda^2 V: (pair, sign)
struct Pair {
    int i, j, sign;
};
constexpr std::array<Pair, 6> kPairs = {{{0, 1, 1}, {2, 3, -1}, {0, 3, 1}, {1, 2, -1}, {0, 2, 1}, {1, 3, 1}}};

const GaussianScalar kOne{Rat(1)};
const GaussianScalar kI{Rat(0), Rat(1)};

} // namespace

GaussMat gmat_identity(std::size_t n) {
    GaussMat m(n, GaussVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = kOne;
    return m;
}

GaussMat gmat_mul(const GaussMat& a, const GaussMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    GaussMat c(n, GaussVec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][t] * b[t][j];
        }
    return c;
}

GaussMat gmat_conj_transpose(const GaussMat& a) {
    GaussMat t(a[0].size(), GaussVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j].conj();
    return t;
}

GaussMat gmat_transpose(const GaussMat& a) {
    GaussMat t(a[0].size(), GaussVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

GaussMat gmat_inverse(GaussMat a) {
    std::size_t n = a.size();
    GaussMat inv = gmat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        require(p < n, "singular Gaussian matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        GaussianScalar piv = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = a[c][j] * piv;
            inv[c][j] = inv[c][j] * piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            GaussianScalar f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[c][j];
                inv[r][j] = inv[r][j] - f * inv[c][j];
            }
        }
    }
    return inv;
}

GaussianScalar gmat_det(const GaussMat& a) {
    GaussMat m = a;
    std::size_t n = m.size();
    GaussianScalar d = kOne;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return GaussianScalar{};
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d = d * m[c][c];
        GaussianScalar piv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            GaussianScalar f = m[r][c] * piv;
            for (std::size_t j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
        }
    }
    return d;
}

bool gmat_eq(const GaussMat& a, const GaussMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool gmat_gaussian_integral(const GaussMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_gaussian_integer()) return false;
    return true;
}

const GaussMat& j_matrix() {
    static const GaussMat j = [] {
        GaussMat m(4, GaussVec(4));
        m[0][2] = kOne;
        m[1][3] = kOne;
        m[2][0] = -kOne;
        m[3][1] = -kOne;
        return m;
    }();
    return j;
}

bool is_u22(const GaussMat& a) {
    if (a.size() != 4 || a[0].size() != 4) return false;
    // A*(iJ)A = iJ is equivalent to A*JA = J
    return gmat_eq(gmat_mul(gmat_conj_transpose(a), gmat_mul(j_matrix(), a)), j_matrix());
}

bool is_su22(const GaussMat& a) { return is_u22(a) && gmat_det(a) == kOne; }

GaussMat wedge_square(const GaussMat& a) {
    GaussMat m(6, GaussVec(6));
    for (int beta = 0; beta < 6; ++beta) {
        auto [ib, jb, sb] = kPairs[beta];
        for (int alpha = 0; alpha < 6; ++alpha) {
            auto [ia, ja, sa] = kPairs[alpha];
            GaussianScalar minor = a[ia][ib] * a[ja][jb] - a[ia][jb] * a[ja][ib];
            m[alpha][beta] = minor * GaussianScalar(Rat(sb) / Rat(sa));
        }
    }
    return m;
}

IntMat minus_q_gram_f() {
    // U + U + U blocks on the signed pair basis
    IntMat g(6, IntVec(6, 0));
    g[0][1] = g[1][0] = 1;
    g[2][3] = g[3][2] = 1;
    g[4][5] = g[5][4] = 1;
    return g;
}

RatMat minus_g_gram_f() {
    // U + U + <-1>^2 on the signed pair basis (real hermitian Gram)
    RatMat g(6, RatVec(6, Rat(0)));
    g[0][1] = g[1][0] = 1;
    g[2][3] = g[3][2] = 1;
    g[4][4] = g[5][5] = -1;
    return g;
}

namespace {

// f -> g change of basis C (columns: g-basis in f-coordinates) and inverse
const GaussMat& basis_change() {
    static const GaussMat c = [] {
        GaussMat m = gmat_identity(6);
        GaussianScalar om{Rat(-1) / 2, Rat(1) / 2};   // (-1+i)/2
        GaussianScalar omb = om.conj();
        m[4][4] = om;
        m[4][5] = -omb;
        m[5][4] = -omb;
        m[5][5] = om;
        return m;
    }();
    return c;
}

const GaussMat& basis_change_inv() {
    static const GaussMat ci = gmat_inverse(basis_change());
    return ci;
}

// Y-coordinate change: x_g = E y
const IntMat& e_matrix() {
    static const IntMat e = [] {
        IntMat m(6, IntVec(6, 0));
        for (int i = 0; i < 4; ++i) m[i][i] = 2;
        m[4][4] = 1;
        m[4][5] = 1;
        m[5][4] = 1;
        m[5][5] = -1;
        return m;
    }();
    return e;
}

} // namespace

IntMat phi(const GaussMat& a) {
    require(a.size() == 4 && a[0].size() == 4, "phi needs a 4x4 matrix");
    require(gmat_gaussian_integral(a), "phi needs Gaussian-integer entries");
    require(is_su22(a), "phi needs an element of SU(2,2;Z[i])");
    GaussMat w = gmat_mul(basis_change_inv(), gmat_mul(wedge_square(a), basis_change()));
    IntMat out(6, IntVec(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const GaussianScalar& x = w[i][j];
            require(x.im == 0 && den(x.re) == 1, "phi produced a non-integral matrix");
            out[i][j] = num(x.re);
        }
    return out;
}

IntMat tau_tilde() {
    IntMat m = identity_mat(6);
    m[4][4] = 0;
    m[5][5] = 0;
    m[4][5] = 1;
    m[5][4] = 1;
    return m;
}

GaussMat m_of_y(const std::array<Int, 6>& y) {
    GaussianScalar half_plus{Rat(y[4]) / 2, Rat(-y[5]) / 2};  // (y5 - i y6)/2
    GaussianScalar half_minus{Rat(y[4]) / 2, Rat(y[5]) / 2};  // (y5 + i y6)/2
    GaussMat m(4, GaussVec(4));
    auto g = [](const Int& v) { return GaussianScalar(Rat(v)); };
    m[0][1] = -g(y[1]);
    m[0][2] = half_plus;
    m[0][3] = -g(y[3]);
    m[1][2] = -g(y[2]);
    m[1][3] = -half_minus;
    m[2][3] = -g(y[0]);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) m[i][j] = -m[j][i];
    return m;
}

GaussianScalar pfaffian(const GaussMat& m) {
    require(m.size() == 4 && m[0].size() == 4, "pfaffian needs a 4x4 matrix");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            require(m[i][j] == -m[j][i], "pfaffian needs a skew matrix");
    return m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
}

const IntMat& equivariance_twist() {
    // S0 = diag(-1,1,-1,1) + [[0,-1],[1,0]] on (y5,y6); the fixed unimodular
    // change between our Y-coordinates and the ones the M(y) display uses
    static const IntMat s0 = [] {
        IntMat m(6, IntVec(6, 0));
        m[0][0] = -1;
        m[1][1] = 1;
        m[2][2] = -1;
        m[3][3] = 1;
        m[4][5] = -1;
        m[5][4] = 1;
        return m;
    }();
    return s0;
}

IntMat phi_y(const GaussMat& a) {
    IntMat p = phi(a);
    // E^{-1} p E must be integral: isometries of T preserve the Y sublattice
    IntMat pe = mat_mul(p, e_matrix());
    IntMat out(6, IntVec(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            // rows of E^{-1}: diag(1/2), and the (5,6) block [[1,1],[1,-1]]/2
            Int v;
            if (i < 4)
                v = pe[i][j];
            else if (i == 4)
                v = pe[4][j] + pe[5][j];
            else
                v = pe[4][j] - pe[5][j];
            require(v % 2 == 0, "phi image leaves the Y-coordinate lattice");
            out[i][j] = v / 2;
        }
    return out;
}

bool pfaffian_equivariance(const GaussMat& a, const std::array<Int, 6>& y) {
    // verified law: tA M(y) A = M(S0 phi(A)^{-1} S0^{-1} y)
    IntMat py = phi_y(a);
    const IntMat& s0 = equivariance_twist();
    RatMat py_inv = rat_inverse(to_rat(py));
    RatMat s0_inv = rat_inverse(to_rat(s0));
    IntVec yv(y.begin(), y.end());
    RatVec z(6, Rat(0));
    {
        RatVec tmp(6, Rat(0));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) tmp[i] += s0_inv[i][j] * Rat(yv[j]);
        RatVec tmp2(6, Rat(0));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) tmp2[i] += py_inv[i][j] * tmp[j];
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) z[i] += Rat(s0[i][j]) * tmp2[j];
    }
    std::array<Int, 6> zi;
    for (int i = 0; i < 6; ++i) {
        if (den(z[i]) != 1) throw precondition_error("equivariance image left the Y lattice");
        zi[i] = num(z[i]);
    }
    GaussMat lhs = gmat_mul(gmat_transpose(a), gmat_mul(m_of_y(y), a));
    if (!gmat_eq(lhs, m_of_y(zi))) return false;
    // pfaffians are constant along the action (det A = 1)
    return pfaffian(lhs) == pfaffian(m_of_y(y));
}

bool in_h2(const GaussMat& w) {
    require(w.size() == 2 && w[0].size() == 2, "H2 membership needs a 2x2 matrix");
    // H = (W - W*)/(2i); positive definite iff both leading minors positive
    GaussMat ws = gmat_conj_transpose(w);
    GaussianScalar inv2i = kI.inverse() * GaussianScalar(Rat(1) / 2);
    GaussMat h(2, GaussVec(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h[i][j] = (w[i][j] - ws[i][j]) * inv2i;
    require(h[0][0].im == 0 && h[1][1].im == 0, "hermitian matrix has non-real diagonal");
    Rat m1 = h[0][0].re;
    Rat m2 = h[0][0].re * h[1][1].re - h[0][1].norm();
    return m1 > 0 && m2 > 0;
}

bool divisor_membership(const GaussMat& w, const std::array<Int, 6>& y) {
    require(in_h2(w), "divisor membership is evaluated on H2");
    GaussMat m = m_of_y(y);
    // (tW 1) M (W ; 1): build the 2x4 and 4x2 factors
    GaussMat left(2, GaussVec(4)), right(4, GaussVec(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            left[i][j] = w[j][i];
            right[j][i] = w[j][i];
        }
    left[0][2] = kOne;
    left[1][3] = kOne;
    right[2][0] = kOne;
    right[3][1] = kOne;
    GaussMat prod = gmat_mul(left, gmat_mul(m, right));
    for (const auto& row : prod)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

GaussVec period_point(const GaussMat& w) {
    require(w.size() == 2 && w[0].size() == 2, "period point needs a 2x2 matrix");
    // rows of (W | I2)
    GaussVec r1{w[0][0], w[0][1], kOne, GaussianScalar{}};
    GaussVec r2{w[1][0], w[1][1], GaussianScalar{}, kOne};
    GaussVec z(6);
    for (int alpha = 0; alpha < 6; ++alpha) {
        auto [i, j, s] = kPairs[alpha];
        z[alpha] = (r1[i] * r2[j] - r1[j] * r2[i]) * GaussianScalar(Rat(s));
    }
    return z;
}

GaussianScalar plucker_wedge_value(const GaussVec& z) {
    // bilinear form -q on f-coordinates: 2(z1 z2 + z3 z4 + z5 z6)
    return (z[0] * z[1] + z[2] * z[3] + z[4] * z[5]) * GaussianScalar(Rat(2));
}

Rat hermitian_norm(const GaussVec& z) {
    // z* (-g) z with -g = U + U + <-1>^2 on f-coordinates
    GaussianScalar s = z[0].conj() * z[1] + z[1].conj() * z[0] + z[2].conj() * z[3] +
                       z[3].conj() * z[2] - z[4].conj() * z[4] - z[5].conj() * z[5];
    require(s.im == 0, "hermitian value must be real");
    return s.re;
}

std::vector<GaussMat> su22_generators() {
    static const std::vector<GaussMat> gens = [] {
        std::vector<GaussMat> out;
        auto unit = [](int re, int im) { return GaussianScalar{Rat(re), Rat(im)}; };
        std::vector<GaussianScalar> units = {unit(1, 0), unit(-1, 0), unit(0, 1), unit(0, -1),
                                             unit(1, 1), unit(1, -1), unit(-1, 1), unit(-1, -1)};
        // single-entry transvections I + a E_jk
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (j == k) continue;
                for (const auto& u : units) {
                    GaussMat a = gmat_identity(4);
                    a[j][k] = u;
                    if (is_su22(a)) out.push_back(a);
                }
            }
        // two-entry transvections I + a E_jk + b E_lm
        static const int pats[][4] = {{0, 3, 1, 2}, {3, 0, 2, 1}, {0, 2, 1, 3}, {2, 0, 3, 1}};
        for (const auto& p : pats)
            for (const auto& u : units)
                for (const auto& v : units) {
                    GaussMat a = gmat_identity(4);
                    a[p[0]][p[1]] = u;
                    a[p[2]][p[3]] = v;
                    if (is_su22(a)) out.push_back(a);
                }
        out.push_back(j_matrix());
        GaussMat d = gmat_identity(4);
        d[0][0] = unit(0, 1);
        d[1][1] = unit(0, -1);
        d[2][2] = unit(0, 1);
        d[3][3] = unit(0, -1);
        require(is_su22(d), "diag(i,-i,i,-i) must lie in SU(2,2;Z[i])");
        out.push_back(d);
        require(is_su22(j_matrix()), "J must lie in SU(2,2;Z[i])");
        return out;
    }();
    return gens;
}

std::vector<GaussMat> su22_samples(std::size_t count, std::uint64_t seed, int word_len) {
    auto gens = su22_generators();
    SplitMix64 rng(seed);
    std::vector<GaussMat> out;
    for (std::size_t i = 0; i < count; ++i) {
        GaussMat a = gmat_identity(4);
        for (int w = 0; w < word_len; ++w)
            a = gmat_mul(a, gens[static_cast<std::size_t>(rng.range(0, static_cast<long>(gens.size()) - 1))]);
        require(is_su22(a), "sample product left SU(2,2;Z[i])");
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace k3lat
