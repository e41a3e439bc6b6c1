#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussian.hpp"
#include "wall.hpp"

#include <array>
#include <set>

using namespace k3lat;

namespace {

GaussianScalar gs(long re, long im = 0) { return {Rat(re), Rat(im)}; }

// oracle for the wedge form: sign of the permutation (i,j,k,l) of (0,1,2,3)
int perm_sign(int i, int j, int k, int l) {
    std::array<int, 4> p{i, j, k, l};
    if (std::set<int>(p.begin(), p.end()).size() < 4) return 0;
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) sign = -sign;
    return sign;
}

struct PairDef {
    int i, j, s;
};
constexpr std::array<PairDef, 6> kPairs = {{{0, 1, 1}, {2, 3, -1}, {0, 3, 1}, {1, 2, -1}, {0, 2, 1}, {1, 3, 1}}};

// f(x,y) = x* J y on coordinate vectors
GaussianScalar f_form(const GaussVec& x, const GaussVec& y) {
    const GaussMat& j = j_matrix();
    GaussianScalar s;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s = s + x[a].conj() * j[a][b] * y[b];
    return s;
}

GaussVec unit4(int k) {
    GaussVec v(4);
    v[static_cast<std::size_t>(k)] = gs(1);
    return v;
}

} // namespace

TEST_CASE("the Gram matrices of -q and -g on the f-basis") {
    // -q from the wedge pairing computed independently of the module
    IntMat q_expected = minus_q_gram_f();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto [ia, ja, sa] = kPairs[static_cast<std::size_t>(a)];
            auto [ib, jb, sb] = kPairs[static_cast<std::size_t>(b)];
            Int q = -Int(sa * sb * perm_sign(ia, ja, ib, jb));
            CHECK(q == q_expected[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    // -g from the hermitian determinant formula
    RatMat g_expected = minus_g_gram_f();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto [ia, ja, sa] = kPairs[static_cast<std::size_t>(a)];
            auto [ib, jb, sb] = kPairs[static_cast<std::size_t>(b)];
            GaussianScalar v = (f_form(unit4(ia), unit4(ib)) * f_form(unit4(ja), unit4(jb)) -
                                f_form(unit4(ja), unit4(ib)) * f_form(unit4(ia), unit4(jb))) *
                               gs(sa * sb);
            CHECK(v.im == 0);
            CHECK(-v.re == g_expected[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
}

TEST_CASE("the omega change of basis reconciles -q and -g") {
    GaussianScalar om{Rat(-1) / 2, Rat(1) / 2}, omb = om.conj();
    GaussMat c = gmat_identity(6);
    c[4][4] = om;
    c[4][5] = -omb;
    c[5][4] = -omb;
    c[5][5] = om;
    // |det C| = 1 (unimodular change)
    GaussianScalar d = gmat_det(c);
    CHECK(d.norm() == 1);

    const IntMat& tg = lattice_t().gram();
    // bilinear transport of -q: C^T (-q) C
    GaussMat q(6, GaussVec(6));
    IntMat mq = minus_q_gram_f();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            gs(static_cast<long>(mq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    GaussMat qg = gmat_mul(gmat_transpose(c), gmat_mul(q, c));
    // sesquilinear transport of -g: C* (-g) C
    GaussMat g(6, GaussVec(6));
    RatMat mg = minus_g_gram_f();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                GaussianScalar{mg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], Rat(0)};
    GaussMat gg = gmat_mul(gmat_conj_transpose(c), gmat_mul(g, c));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            GaussianScalar want = gs(static_cast<long>(
                tg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            CHECK(qg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == want);
            CHECK(gg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == want);
        }
}

TEST_CASE("is_u22") {
    CHECK(is_u22(gmat_identity(4)));
    GaussMat d = gmat_identity(4);
    d[0][0] = gs(0, 1);
    d[1][1] = gs(0, 1);
    d[2][2] = gs(0, -1);
    d[3][3] = gs(0, -1);
    CHECK_FALSE(is_u22(d));  // exact computation rejects diag(i,i,-i,-i)
    CHECK(is_su22(j_matrix()));
}

TEST_CASE("wedge square") {
    GaussMat id4 = gmat_identity(4);
    CHECK(gmat_eq(wedge_square(id4), gmat_identity(6)));

    GaussMat d = gmat_identity(4);
    d[0][0] = gs(7);
    GaussMat w = wedge_square(d);
    // lambda appears exactly on the three pair coordinates containing e1
    for (int a = 0; a < 6; ++a) {
        auto [i, j, s] = kPairs[static_cast<std::size_t>(a)];
        GaussianScalar want = (i == 0 || j == 0) ? gs(7) : gs(1);
        CHECK(w[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] == want);
    }

    auto samples = su22_samples(4, 5);
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
        GaussMat ab = gmat_mul(samples[i], samples[i + 1]);
        CHECK(gmat_eq(wedge_square(ab), gmat_mul(wedge_square(samples[i]),
                                                 wedge_square(samples[i + 1]))));
    }
}

TEST_CASE("phi basics") {
    CHECK(phi(gmat_identity(4)) == identity_mat(6));
    GaussMat i_id = gmat_identity(4);
    for (int k = 0; k < 4; ++k) i_id[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = gs(0, 1);
    IntMat m = phi(i_id);
    IntMat minus(6, IntVec(6, 0));
    for (int k = 0; k < 6; ++k) minus[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = -1;
    CHECK(m == minus);  // the center {1,-1} is killed, phi(iI) = -I

    // A = I mod (1+i), A != I: phi(A) = I mod 2  (2 = (1+i)(1-i))
    GaussMat a = gmat_identity(4);
    a[0][2] = gs(2);
    REQUIRE(is_su22(a));
    IntMat p = phi(a);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Int d = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - (i == j ? 1 : 0);
            CHECK(d % 2 == 0);
        }
    CHECK(p != identity_mat(6));

    CHECK_THROWS_AS(phi(gmat_mul(gmat_identity(4), [] {
                        GaussMat bad = gmat_identity(4);
                        bad[0][1] = gs(1);
                        return bad;
                    }())),
                    precondition_error);
}

TEST_CASE("tau-tilde and complex conjugation") {
    IntMat tau = tau_tilde();
    CHECK(mat_mul(tau, tau) == identity_mat(6));
    IntMat conj_g = mat_mul(mat_transpose(tau), mat_mul(lattice_t().gram(), tau));
    CHECK(conj_g == lattice_t().gram());
    bool mod2_id = true;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if ((tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - (i == j ? 1 : 0)) % 2 != 0)
                mod2_id = false;
    CHECK_FALSE(mod2_id);  // not in the congruence-2 subgroup

    // entrywise conjugation intertwines phi through the signed swap
    // j: g5 -> -g6, g6 -> -g5 (tau-tilde up to the sign of the swapped pair;
    // both act alike modulo the center)
    IntMat j = identity_mat(6);
    j[4][4] = 0;
    j[5][5] = 0;
    j[4][5] = -1;
    j[5][4] = -1;
    CHECK(mat_mul(mat_transpose(j), mat_mul(lattice_t().gram(), j)) == lattice_t().gram());
    for (const auto& a : su22_samples(6, 11)) {
        GaussMat abar = a;
        for (auto& row : abar)
            for (auto& x : row) x = x.conj();
        CHECK(phi(abar) == mat_mul(j, mat_mul(phi(a), j)));
    }
}

TEST_CASE("M(y) and the pfaffian") {
    std::array<Int, 6> zero{};
    GaussMat m0 = m_of_y(zero);
    for (const auto& row : m0)
        for (const auto& x : row) CHECK(x.is_zero());
    CHECK(pfaffian(m0).is_zero());

    std::array<Int, 6> y{0, 0, 0, 0, 1, 0};
    GaussMat m = m_of_y(y);
    CHECK(m[0][2] == GaussianScalar{Rat(1) / 2, Rat(0)});
    CHECK(m[1][3] == GaussianScalar{Rat(-1) / 2, Rat(0)});
    CHECK(pfaffian(m) == GaussianScalar{Rat(1) / 4, Rat(0)});

    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        GaussMat s(4, GaussVec(4));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                GaussianScalar v{Rat(rng.range(-4, 4)), Rat(rng.range(-4, 4)) / Rat(3)};
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
            }
        GaussianScalar pf = pfaffian(s);
        CHECK(pf * pf == gmat_det(s));
    }
    CHECK_THROWS_AS(pfaffian(gmat_identity(4)), precondition_error);
}

TEST_CASE("pfaffian equivariance") {
    std::array<Int, 6> y{1, -2, 3, 0, 2, -1};
    CHECK(pfaffian_equivariance(gmat_identity(4), y));
    GaussMat i_id = gmat_identity(4);
    for (int k = 0; k < 4; ++k)
        i_id[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = gs(0, 1);
    CHECK(pfaffian_equivariance(i_id, y));
    for (const auto& a : su22_samples(8, 17)) CHECK(pfaffian_equivariance(a, y));
}

TEST_CASE("H2 membership") {
    GaussMat w = gmat_identity(2);
    w[0][0] = gs(0, 1);
    w[1][1] = gs(0, 1);
    w[0][1] = GaussianScalar{};
    w[1][0] = GaussianScalar{};
    CHECK(in_h2(w));
    GaussMat z(2, GaussVec(2));
    CHECK_FALSE(in_h2(z));
    GaussMat d(2, GaussVec(2));
    d[0][0] = gs(0, 1);
    d[1][1] = gs(0, -1);
    CHECK_FALSE(in_h2(d));
}

TEST_CASE("divisor membership") {
    GaussMat w(2, GaussVec(2));
    w[0][0] = gs(0, 1);
    w[1][1] = gs(0, 1);
    std::array<Int, 6> zero{};
    CHECK(divisor_membership(w, zero));

    // for y = e5 the membership condition is w21 = -w12
    std::array<Int, 6> y{0, 0, 0, 0, 1, 0};
    GaussMat wm = w;
    wm[0][1] = GaussianScalar{Rat(0), Rat(1) / 2};
    wm[1][0] = GaussianScalar{Rat(0), Rat(-1) / 2};
    REQUIRE(in_h2(wm));
    CHECK(divisor_membership(wm, y));
    GaussMat wg = w;
    wg[0][1] = gs(1);
    REQUIRE(in_h2(wg));
    CHECK_FALSE(divisor_membership(wg, y));
}

TEST_CASE("period points") {
    GaussMat w(2, GaussVec(2));
    GaussVec z = period_point(w);
    // the coordinate point of the span of (0,0,1,0) and (0,0,0,1)
    CHECK(z[1] == gs(-1));
    for (int i : {0, 2, 3, 4, 5}) CHECK(z[static_cast<std::size_t>(i)].is_zero());

    GaussMat wi = w;
    wi[0][0] = gs(0, 1);
    wi[1][1] = gs(0, 1);
    GaussVec zi = period_point(wi);
    CHECK(plucker_wedge_value(zi).is_zero());
    CHECK(hermitian_norm(zi) > 0);

    SplitMix64 rng(23);
    int positives = 0;
    for (int t = 0; t < 40; ++t) {
        GaussMat wr(2, GaussVec(2));
        for (auto& row : wr)
            for (auto& x : row)
                x = GaussianScalar{Rat(rng.range(-5, 5)) / Rat(2), Rat(rng.range(-5, 5)) / Rat(3)};
        CHECK(plucker_wedge_value(period_point(wr)).is_zero());
        // points of H2 land in the positive cone of the hermitian form
        GaussMat wh = wr;
        wh[0][0] = wh[0][0] + gs(0, 2);
        wh[1][1] = wh[1][1] + gs(0, 2);
        if (in_h2(wh)) {
            ++positives;
            CHECK(hermitian_norm(period_point(wh)) > 0);
        }
    }
    CHECK(positives > 10);
}

TEST_CASE("sample generation") {
    auto gens = su22_generators();
    CHECK(gens.size() >= 10);
    for (const auto& g : gens) CHECK(is_su22(g));
    auto samples = su22_samples(50, 7);
    CHECK(samples.size() == 50);
    for (const auto& a : samples) CHECK(is_su22(a));
}
