#include "discform.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace k3lat {

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Int> orders, RatMat b, RatVec q)
    : orders_(std::move(orders)), b_(std::move(b)), q_(std::move(q)) {
    std::size_t n = orders_.size();
    require(b_.size() == n && q_.size() == n, "generator data size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        require(orders_[i] >= 2, "generator orders must be >= 2");
        q_[i] = mod_reduce(q_[i], 2);
        for (std::size_t j = 0; j < n; ++j) b_[i][j] = mod_reduce(b_[i][j], 1);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            require(b_[i][j] == b_[j][i], "b must be symmetric");
            require(mod_reduce(Rat(orders_[i]) * b_[i][j], 1) == 0, "d_i * b(i,j) must vanish mod 1");
        }
}

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (const auto& d : orders_) n *= d;
    return n;
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::reduce(Elem e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] %= orders_[i];
        if (e[i] < 0) e[i] += orders_[i];
    }
    return e;
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::add(const Elem& a, const Elem& b) const {
    Elem r(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

FiniteQuadraticForm::Elem FiniteQuadraticForm::smul(const Int& k, const Elem& a) const {
    Elem r(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) r[i] = k * a[i];
    return reduce(std::move(r));
}

Rat FiniteQuadraticForm::q_of(const Elem& e) const {
    Rat s(0);
    for (std::size_t i = 0; i < ngens(); ++i) {
        if (e[i] == 0) continue;
        s += Rat(e[i] * e[i]) * q_[i];
        for (std::size_t j = i + 1; j < ngens(); ++j) s += Rat(2 * e[i] * e[j]) * b_[i][j];
    }
    return mod_reduce(s, 2);
}

Rat FiniteQuadraticForm::b_of(const Elem& a, const Elem& b) const {
    Rat s(0);
    for (std::size_t i = 0; i < ngens(); ++i)
        for (std::size_t j = 0; j < ngens(); ++j) {
            if (a[i] == 0 || b[j] == 0) continue;
            s += Rat(a[i] * b[j]) * b_[i][j];
        }
    return mod_reduce(s, 1);
}

Int FiniteQuadraticForm::elem_order(const Elem& e) const {
    Int ord = 1;
    for (std::size_t i = 0; i < ngens(); ++i) {
        if (e[i] == 0) continue;
        Int d = orders_[i] / gcd_int(orders_[i], e[i]);
        ord = ord / gcd_int(ord, d) * d;
    }
    return ord;
}

std::vector<FiniteQuadraticForm::Elem> FiniteQuadraticForm::all_elements() const {
    require(group_order() <= 1024, "group too large to enumerate");
    std::vector<Elem> out;
    Elem cur = zero();
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < ngens()) {
            cur[i] += 1;
            if (cur[i] < orders_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == ngens()) break;
    }
    return out;
}

FiniteQuadraticForm FiniteQuadraticForm::negate() const {
    RatMat b = b_;
    RatVec q = q_;
    for (auto& row : b)
        for (auto& x : row) x = -x;
    for (auto& x : q) x = -x;
    return FiniteQuadraticForm(orders_, std::move(b), std::move(q));
}

FiniteQuadraticForm FiniteQuadraticForm::orthogonal_sum(const FiniteQuadraticForm& o) const {
    std::size_t n = ngens(), m = o.ngens();
    std::vector<Int> orders = orders_;
    orders.insert(orders.end(), o.orders_.begin(), o.orders_.end());
    RatMat b(n + m, RatVec(n + m, Rat(0)));
    RatVec q(n + m, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = q_[i];
        for (std::size_t j = 0; j < n; ++j) b[i][j] = b_[i][j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        q[n + i] = o.q_[i];
        for (std::size_t j = 0; j < m; ++j) b[n + i][n + j] = o.b_[i][j];
    }
    return FiniteQuadraticForm(std::move(orders), std::move(b), std::move(q));
}

bool FiniteQuadraticForm::is_two_elementary() const {
    return std::all_of(orders_.begin(), orders_.end(), [](const Int& d) { return d == 2; });
}

bool FiniteQuadraticForm::q_integer_valued() const {
    if (group_order() <= 1024) {
        for (const auto& e : all_elements())
            if (den(q_of(e)) != 1) return false;
        return true;
    }
    for (const auto& q : q_)
        if (den(q) != 1) return false;
    for (std::size_t i = 0; i < ngens(); ++i)
        for (std::size_t j = i + 1; j < ngens(); ++j)
            if (den(Rat(2) * b_[i][j]) != 1) return false;
    return true;
}

FiniteQuadraticForm::Elem FiniteIsometry::apply(const FiniteQuadraticForm& target,
                                                const FiniteQuadraticForm::Elem& e) const {
    auto r = target.zero();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) r = target.add(r, target.smul(e[i], images[i]));
    return r;
}

DiscGroup discriminant_group(const IntLattice& l) {
    SmithResult s = smith_normal_form(l.gram());
    RatMat ginv = rat_inverse(to_rat(l.gram()));
    // generator for factor i: G^{-1} U^{-1} e_i = V S^{-1} e_i = (1/s_i) * V column i
    DiscGroup g;
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] == 1) continue;
        g.invariant_factors.push_back(s.diag[i]);
        RatVec v(l.rank());
        for (std::size_t r = 0; r < l.rank(); ++r) v[r] = Rat(s.right[r][i]) / Rat(s.diag[i]);
        g.generators.push_back(std::move(v));
    }
    return g;
}

namespace {

Rat pair_rat(const IntLattice& l, const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < l.rank(); ++j) s += a[i] * Rat(l.gram()[i][j]) * b[j];
    }
    return s;
}

} // namespace

FiniteQuadraticForm form_on_generators(const IntLattice& l, const std::vector<Int>& orders,
                                       const RatMat& generators) {
    require(l.is_even(), "discriminant form needs an even lattice");
    std::size_t n = orders.size();
    RatMat b(n, RatVec(n));
    RatVec q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = pair_rat(l, generators[i], generators[i]);
        for (std::size_t j = 0; j < n; ++j) b[i][j] = pair_rat(l, generators[i], generators[j]);
    }
    return FiniteQuadraticForm(orders, std::move(b), std::move(q));
}

FiniteQuadraticForm discriminant_form(const IntLattice& l) {
    require(l.is_even(), "discriminant form needs an even lattice");
    DiscGroup g = discriminant_group(l);
    return form_on_generators(l, g.invariant_factors, g.generators);
}

FiniteQuadraticForm::Elem class_of(const IntLattice& l, const RatVec& dual_vec) {
    // solve dual_vec = sum e_i * gen_i (mod L) for the exponents e_i:
    // the class map x -> (U * G x) mod s picks out the exponents.
    SmithResult s = smith_normal_form(l.gram());
    RatVec gx(l.rank(), Rat(0));
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) gx[i] += Rat(l.gram()[i][j]) * dual_vec[j];
    IntVec y(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        require(den(gx[i]) == 1, "vector is not in the dual lattice");
        y[i] = num(gx[i]);
    }
    IntVec uy = mat_apply(s.left, y);
    FiniteQuadraticForm::Elem e;
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] == 1) continue;
        Int c = uy[i] % s.diag[i];
        if (c < 0) c += s.diag[i];
        e.push_back(c);
    }
    return e;
}

NikulinInvariants nikulin_invariants(const IntLattice& l) {
    require(l.is_even(), "nikulin invariants need an even lattice");
    FiniteQuadraticForm f = discriminant_form(l);
    require(f.is_two_elementary(), "lattice is not 2-elementary");
    return {l.signature(), static_cast<int>(f.orders().size()), f.q_integer_valued()};
}

bool nikulin_equivalent(const IntLattice& l1, const IntLattice& l2) {
    for (const IntLattice* l : {&l1, &l2}) {
        require(l->is_even(), "nikulin equivalence needs even lattices");
        SignaturePair s = l->signature();
        require(s.pos > 0 && s.neg > 0, "nikulin equivalence needs indefinite lattices");
    }
    return nikulin_invariants(l1) == nikulin_invariants(l2);
}

namespace {

// backtracking over generator images; sign = -1 for anti-isometries
std::optional<FiniteIsometry> find_map(const FiniteQuadraticForm& f1,
                                       const FiniteQuadraticForm& f2, int sign) {
    if (f1.orders() != f2.orders()) return std::nullopt;
    if (f1.ngens() == 0) return FiniteIsometry{{}};
    if (f2.group_order() > 1024) throw precondition_error("group too large for isometry search");
    auto elems = f2.all_elements();
    std::vector<FiniteQuadraticForm::Elem> img;
    std::function<bool(std::size_t)> bt = [&](std::size_t k) -> bool {
        if (k == f1.ngens()) {
            // bijectivity: images of all elements distinct
            std::vector<FiniteQuadraticForm::Elem> seen;
            FiniteIsometry sigma{img};
            for (const auto& e : f1.all_elements()) seen.push_back(sigma.apply(f2, e));
            std::sort(seen.begin(), seen.end());
            return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        }
        for (const auto& cand : elems) {
            if (f2.smul(f1.orders()[k], cand) != f2.zero()) continue;
            Rat want_q = mod_reduce(Rat(sign) * f1.q_gen(k), 2);
            if (f2.q_of(cand) != want_q) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                Rat want_b = mod_reduce(Rat(sign) * f1.b_gen(k, j), 1);
                if (f2.b_of(cand, img[j]) != want_b) ok = false;
            }
            if (!ok) continue;
            img.push_back(cand);
            if (bt(k + 1)) return true;
            img.pop_back();
        }
        return false;
    };
    if (bt(0)) return FiniteIsometry{img};
    return std::nullopt;
}

} // namespace

std::optional<FiniteIsometry> find_anti_isometry(const FiniteQuadraticForm& f1,
                                                 const FiniteQuadraticForm& f2) {
    return find_map(f1, f2, -1);
}

std::optional<FiniteIsometry> find_isometry(const FiniteQuadraticForm& f1,
                                            const FiniteQuadraticForm& f2) {
    return find_map(f1, f2, 1);
}

bool verify_anti_isometry(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                          const FiniteIsometry& sigma) {
    auto elems = f1.all_elements();
    for (const auto& x : elems) {
        if (f2.q_of(sigma.apply(f2, x)) != mod_reduce(-f1.q_of(x), 2)) return false;
        for (const auto& y : elems)
            if (f2.b_of(sigma.apply(f2, x), sigma.apply(f2, y)) !=
                mod_reduce(-f1.b_of(x, y), 1))
                return false;
    }
    return true;
}

std::vector<std::vector<FiniteQuadraticForm::Elem>> isometry_orbits(const FiniteQuadraticForm& f) {
    auto elems = f.all_elements();
    std::size_t n = elems.size();
    std::map<FiniteQuadraticForm::Elem, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // decide x ~ y by backtracking a full isometry with the prescribed image;
    // b(sigma g_k, y) = b(g_k, x) prunes against the anchor
    auto equivalent = [&](const FiniteQuadraticForm::Elem& x,
                          const FiniteQuadraticForm::Elem& y)
        -> std::optional<FiniteIsometry> {
        std::vector<FiniteQuadraticForm::Elem> img;
        std::function<bool(std::size_t)> bt = [&](std::size_t k) -> bool {
            if (k == f.ngens()) {
                FiniteIsometry sigma{img};
                if (sigma.apply(f, x) != y) return false;
                std::vector<FiniteQuadraticForm::Elem> seen;
                for (const auto& e : elems) seen.push_back(sigma.apply(f, e));
                std::sort(seen.begin(), seen.end());
                return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
            }
            FiniteQuadraticForm::Elem gk = f.zero();
            gk[k] = 1;
            for (const auto& cand : elems) {
                if (f.smul(f.orders()[k], cand) != f.zero()) continue;
                if (f.q_of(cand) != f.q_gen(k)) continue;
                if (f.b_of(cand, y) != f.b_of(gk, x)) continue;
                bool ok = true;
                for (std::size_t j = 0; j < k && ok; ++j)
                    if (f.b_of(cand, img[j]) != f.b_gen(k, j)) ok = false;
                if (!ok) continue;
                img.push_back(cand);
                if (bt(k + 1)) return true;
                img.pop_back();
            }
            return false;
        };
        if (bt(0)) return FiniteIsometry{img};
        return std::nullopt;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            bool xz = elems[i] == f.zero(), yz = elems[j] == f.zero();
            if (xz != yz) continue;  // zero is fixed by every isometry
            if (f.q_of(elems[i]) != f.q_of(elems[j])) continue;
            if (f.elem_order(elems[i]) != f.elem_order(elems[j])) continue;
            auto sigma = equivalent(elems[i], elems[j]);
            if (!sigma) continue;
            // merge the whole graph of the witness, not just the pair
            for (std::size_t t = 0; t < n; ++t)
                unite(t, index.at(sigma->apply(f, elems[t])));
        }
    }

    std::map<std::size_t, std::vector<FiniteQuadraticForm::Elem>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(elems[i]);
    std::vector<std::vector<FiniteQuadraticForm::Elem>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

IntLattice glue_overlattice(const IntLattice& l, const RatMat& glue_classes) {
    if (glue_classes.empty()) return l;
    // isotropy of the generated subgroup: q = 0 mod 2 and b = 0 mod 1 on generators
    for (std::size_t i = 0; i < glue_classes.size(); ++i) {
        require(mod_reduce(pair_rat(l, glue_classes[i], glue_classes[i]), 2) == 0,
                "glue class is not isotropic (q != 0 mod 2)");
        for (std::size_t j = i + 1; j < glue_classes.size(); ++j)
            require(mod_reduce(pair_rat(l, glue_classes[i], glue_classes[j]), 1) == 0,
                    "glue classes do not pair integrally");
    }
    std::size_t n = l.rank();
    RatMat rows;
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n, Rat(0));
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    for (const auto& c : glue_classes) rows.push_back(c);
    RatMat basis = lattice_row_basis(rows);
    require(basis.size() == n, "overlattice rank changed");
    IntMat gram(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = Rat(0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    v += basis[i][a] * Rat(l.gram()[a][b]) * basis[j][b];
            require(den(v) == 1, "overlattice is not integral");
            gram[i][j] = num(v);
        }
    IntLattice out(std::move(gram), l.label().empty() ? "" : l.label() + "-glued");
    require(!l.is_even() || out.is_even(), "overlattice failed evenness");
    return out;
}

EnhanceResult enhance(const IntLattice& l, const IntLattice& m, const FiniteIsometry& gamma,
                      const IntVec& v) {
    require(is_primitive(m, v), "enhancing vector must be primitive");
    require(m.norm(v) < 0, "enhancing vector must have negative square");
    IntLattice t = orthogonal_complement(m, v);

    // order-2 class of v/2 in delta(M)
    RatVec vh(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) vh[i] = Rat(v[i]) / 2;
    FiniteQuadraticForm fm = discriminant_form(m);
    auto vbar = class_of(m, vh);
    require(fm.smul(2, vbar) == fm.zero() && vbar != fm.zero(),
            "v/2 does not induce an order-2 class");
    auto wbar = gamma.apply(discriminant_form(l), vbar);

    // glue class on L + <v^2>: gamma(vbar) + (new generator)/2
    DiscGroup dl = discriminant_group(l);
    RatVec glue(l.rank() + 1, Rat(0));
    for (std::size_t i = 0; i < wbar.size(); ++i)
        for (std::size_t r = 0; r < l.rank(); ++r)
            glue[r] += Rat(wbar[i]) * dl.generators[i][r];
    glue[l.rank()] = Rat(1) / 2;

    IntLattice base = direct_sum(l, lat_diag(m.norm(v)));
    IntLattice ns = glue_overlattice(base, {glue});
    require(ns.is_even(), "enhanced lattice failed evenness (gamma/v incompatible)");
    require(ns.determinant() * 4 == l.determinant() * m.norm(v),
            "enhanced determinant violates det(L)*v^2/4");
    return {std::move(ns), std::move(t)};
}

} // namespace k3lat
