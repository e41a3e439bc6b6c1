#include "lattice.hpp"

#include <algorithm>

namespace k3lat {

IntLattice::IntLattice(IntMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        require(gram_[i].size() == n, "gram matrix must be square");
        for (std::size_t j = 0; j < n; ++j)
            require(gram_[i][j] == gram_[j][i], "gram matrix must be symmetric");
    }
    if (n > 0) require(det_bareiss(gram_) != 0, "gram matrix must be nondegenerate");
}

Int IntLattice::pair(const IntVec& a, const IntVec& b) const {
    require(a.size() == rank() && b.size() == rank(), "vector length must match rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

Int IntLattice::determinant() const { return det_bareiss(gram_); }

SignaturePair IntLattice::signature() const {
    Inertia in = symmetric_inertia(to_rat(gram_));
    return {in.pos, in.neg};
}

bool IntLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_[i][i] % 2 != 0) return false;
    return true;
}

bool IntLattice::is_definite() const {
    SignaturePair s = signature();
    return s.pos == 0 || s.neg == 0;
}

IntLattice lat_u() {
    return IntLattice({{0, 1}, {1, 0}}, "U");
}

IntLattice lat_a(int k) {
    require(k >= 1, "A(k) needs k >= 1");
    IntMat g(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i) {
        g[i][i] = -2;
        if (i + 1 < k) g[i][i + 1] = g[i + 1][i] = 1;
    }
    return IntLattice(std::move(g), "A" + std::to_string(k));
}

IntLattice lat_d(int k) {
    require(k >= 4, "D(k) needs k >= 4");
    // chain v1..v_{k-2} with the fork v_{k-1}, v_k both attached to v_{k-2}
    IntMat g(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < k - 1; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[k - 3][k - 1] = g[k - 1][k - 3] = 1;
    return IntLattice(std::move(g), "D" + std::to_string(k));
}

IntLattice lat_e(int k) {
    require(k >= 6 && k <= 8, "E(k) needs k in {6,7,8}");
    // chain v1..v_{k-1} with v_k attached to v3
    IntMat g(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < k - 1; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[2][k - 1] = g[k - 1][2] = 1;
    return IntLattice(std::move(g), "E" + std::to_string(k));
}

IntLattice lat_diag(const Int& n) {
    require(n != 0, "diag(n) needs n != 0");
    return IntLattice({{n}}, "<" + n.str() + ">");
}

IntLattice make_standard(const std::string& name) {
    if (name == "U") return lat_u();
    auto num_after = [&](std::size_t pos) -> int {
        try {
            return std::stoi(name.substr(pos));
        } catch (const std::exception&) {
            throw input_error("invalid lattice family index: " + name);
        }
    };
    if (name.size() >= 2 && name[0] == 'A') return lat_a(num_after(1));
    if (name.size() >= 2 && name[0] == 'D') return lat_d(num_after(1));
    if (name.size() >= 2 && name[0] == 'E') return lat_e(num_after(1));
    if (name.size() >= 3 && name.front() == '<' && name.back() == '>')
        return lat_diag(Int(name.substr(1, name.size() - 2)));
    if (name.size() >= 4 && name.rfind("U(", 0) == 0 && name.back() == ')')
        return rescale(lat_u(), Int(name.substr(2, name.size() - 3)));
    throw input_error("unknown standard lattice: " + name);
}

IntLattice direct_sum(const IntLattice& l1, const IntLattice& l2) {
    std::size_t n1 = l1.rank(), n2 = l2.rank();
    IntMat g(n1 + n2, IntVec(n1 + n2, 0));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) g[i][j] = l1.gram()[i][j];
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) g[n1 + i][n1 + j] = l2.gram()[i][j];
    std::string label = l1.label();
    if (!label.empty() && !l2.label().empty()) label += "+" + l2.label();
    return IntLattice(std::move(g), label);
}

IntLattice rescale(const IntLattice& l, const Int& a) {
    require(a != 0, "rescale needs a != 0");
    IntMat g = l.gram();
    for (auto& row : g)
        for (auto& x : row) x *= a;
    std::string label = l.label().empty() ? "" : l.label() + "(" + a.str() + ")";
    return IntLattice(std::move(g), label);
}

bool is_primitive(const IntLattice& l, const IntVec& v) {
    require(v.size() == l.rank(), "vector length must match rank");
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    require(g != 0, "zero vector");
    return g == 1;
}

IntLattice orthogonal_complement(const IntLattice& l, const IntVec& v) {
    require(v.size() == l.rank(), "vector length must match rank");
    bool nonzero = false;
    for (const auto& x : v)
        if (x != 0) nonzero = true;
    require(nonzero, "zero vector");
    IntVec gv = mat_apply(l.gram(), v);
    IntMat kernel = integer_kernel(IntMat{gv});
    require(kernel.size() == l.rank() - 1, "complement has unexpected rank");
    IntMat g(kernel.size(), IntVec(kernel.size()));
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < kernel.size(); ++j) g[i][j] = l.pair(kernel[i], kernel[j]);
    require(det_bareiss(g) != 0, "degenerate complement (isotropic vector)");
    return IntLattice(std::move(g), l.label().empty() ? "" : l.label() + "-perp");
}

ScaleNorm scale_and_norm(const IntLattice& l) {
    Int scale = 0, norm = 0;
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) {
            scale = gcd_int(scale, l.gram()[i][j]);
            norm = gcd_int(norm, i == j ? l.gram()[i][i] : 2 * l.gram()[i][j]);
        }
    return {scale, norm};
}

namespace {

// exact floor(sqrt(r)) for r >= 0
Int rat_isqrt_floor(const Rat& r) {
    if (r < 0) return 0;
    Int n = num(r), d = den(r);
    Int prod = n * d;
    Int s = boost::multiprecision::sqrt(prod);
    // s = floor(sqrt(n*d)); floor(sqrt(n/d)) = floor(s/d)
    return s / d;
}

struct Enumerator {
    const RatMat* q;  // positive definite rational Gram (LDL stored)
    RatMat l;         // unit lower-triangular
    RatVec d;         // positive diagonal
    std::size_t n;

    explicit Enumerator(const IntMat& gram) {
        n = gram.size();
        RatMat a = to_rat(gram);
        l = RatMat(n, RatVec(n, Rat(0)));
        d = RatVec(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            l[j][j] = 1;
            Rat dj = a[j][j];
            for (std::size_t k = 0; k < j; ++k) dj -= d[k] * l[j][k] * l[j][k];
            d[j] = dj;
            require(dj > 0, "lattice not positive definite");
            for (std::size_t i = j + 1; i < n; ++i) {
                Rat v = a[i][j];
                for (std::size_t k = 0; k < j; ++k) v -= d[k] * l[i][k] * l[j][k];
                l[i][j] = v / dj;
            }
        }
    }

    // enumerate x with Q(x) == target, first nonzero coordinate positive
    void collect(const Rat& target, std::vector<IntVec>& out) {
        IntVec x(n, 0);
        rec(n, target, x, out);
    }

    void rec(std::size_t k, const Rat& remaining, IntVec& x, std::vector<IntVec>& out) {
        if (remaining < 0) return;
        if (k == 0) {
            if (remaining == 0) {
                // normalize sign: last nonzero coordinate positive
                for (std::size_t i = 0; i < n; ++i) {
                    if (x[i] == 0) continue;
                    if (x[i] > 0) out.push_back(x);
                    return;
                }
            }
            return;
        }
        std::size_t i = k - 1;
        // center c = sum_{j>i} l[j][i] x[j]
        Rat c(0);
        for (std::size_t j = i + 1; j < n; ++j) c += l[j][i] * Rat(x[j]);
        Rat bound2 = remaining / d[i];
        Int w = rat_isqrt_floor(bound2) + 1;
        Int lo = -w - num(c) / den(c) - 1, hi = w - num(c) / den(c) + 1;
        for (Int t = lo; t <= hi; ++t) {
            Rat y = Rat(t) + c;
            Rat used = d[i] * y * y;
            if (used > remaining) continue;
            x[i] = t;
            rec(i, remaining - used, x, out);
        }
        x[i] = 0;
    }
};

} // namespace

std::vector<IntVec> vectors_of_norm(const IntMat& posdef_gram, const Int& target) {
    Enumerator e(posdef_gram);
    std::vector<IntVec> out;
    e.collect(Rat(target), out);
    return out;
}

bool is_isometric_definite(const IntLattice& l1, const IntLattice& l2) {
    require(l1.is_definite() && l2.is_definite(), "is_isometric_definite needs definite lattices");
    require(l1.rank() <= 12 && l2.rank() <= 12, "rank too large for backtracking oracle");
    if (l1.rank() != l2.rank()) return false;
    if (l1.determinant() != l2.determinant()) return false;
    if (l1.signature() != l2.signature()) return false;
    std::size_t n = l1.rank();
    if (n == 0) return true;
    bool flip = l1.signature().neg > 0;  // work with the positive definite form
    auto pos = [&](const IntMat& g) {
        IntMat h = g;
        if (flip)
            for (auto& row : h)
                for (auto& x : row) x = -x;
        return h;
    };
    IntMat g1 = pos(l1.gram()), g2 = pos(l2.gram());
    // candidate image vectors in L2 for each basis vector of L1, by norm
    std::vector<std::vector<IntVec>> cands(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<IntVec> up = vectors_of_norm(g2, g1[i][i]);
        for (const auto& v : up) {
            cands[i].push_back(v);
            IntVec neg(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
            cands[i].push_back(std::move(neg));
        }
        if (cands[i].empty()) return false;
    }
    std::vector<IntVec> img;
    auto pair2 = [&](const IntVec& a, const IntVec& b) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += a[i] * g2[i][j] * b[j];
        return s;
    };
    std::function<bool(std::size_t)> bt = [&](std::size_t k) -> bool {
        if (k == n) {
            IntMat b(n, IntVec(n));
            for (std::size_t i = 0; i < n; ++i) b[i] = img[i];
            Int d = det_bareiss(b);
            return d == 1 || d == -1;
        }
        for (const auto& v : cands[k]) {
            bool ok = true;
            for (std::size_t j = 0; j < k; ++j)
                if (pair2(v, img[j]) != g1[k][j]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img.push_back(v);
            if (bt(k + 1)) return true;
            img.pop_back();
        }
        return false;
    };
    return bt(0);
}

} // namespace k3lat
