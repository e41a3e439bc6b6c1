#include "quaternion.hpp"

#include <algorithm>

namespace k3lat {

namespace {
constexpr long kTrialLimit = 1000000;
}

std::map<Int, int> factorize(Int n) {
    require(n != 0, "cannot factor 0");
    std::map<Int, int> f;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n && p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) {
        require(n <= kTrialLimit * Int(kTrialLimit), "factor exceeds trial-division range");
        // remaining cofactor below the square of the bound is prime
        ++f[n];
    }
    return f;
}

std::map<Int, int> factorize_rat(const Rat& r) {
    require(r != 0, "cannot factor 0");
    auto f = factorize(num(r));
    for (const auto& [p, e] : factorize(den(r))) f[p] -= e;
    for (auto it = f.begin(); it != f.end();)
        it = it->second == 0 ? f.erase(it) : std::next(it);
    return f;
}

bool is_prime_small(const Int& p) {
    if (p < 2) return false;
    auto f = factorize(p);
    return f.size() == 1 && f.begin()->second == 1;
}

namespace {

int valuation(const Rat& a, const Int& p) {
    int v = 0;
    Int n = num(a) < 0 ? -num(a) : num(a), d = den(a);
    while (n % p == 0) {
        ++v;
        n /= p;
    }
    while (d % p == 0) {
        --v;
        d /= p;
    }
    return v;
}

// p-unit part of a
Rat unit_part(const Rat& a, const Int& p) {
    Rat u = a;
    int v = valuation(a, p);
    for (int i = 0; i < v; ++i) u /= Rat(p);
    for (int i = 0; i > v; --i) u *= Rat(p);
    return u;
}

// Legendre symbol of a p-unit rational, odd prime p
int legendre(const Rat& u, const Int& p) {
    Int n = num(u) % p, d = den(u) % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    Int a = (n * d) % p;  // (n/d | p) = (n*d | p)
    Int e = boost::multiprecision::powm(a, (p - 1) / 2, p);
    if (e == 0) throw precondition_error("legendre symbol of a non-unit");
    return e == 1 ? 1 : -1;
}

// residue of an odd rational mod 8
Int mod8(const Rat& u) {
    Int n = num(u) % 8, d = den(u) % 8;
    if (n < 0) n += 8;
    if (d < 0) d += 8;
    // inverse of odd d mod 8 is d itself
    return (n * d) % 8;
}

} // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& p) {
    require(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    require(is_prime_small(p), "place must be a prime or 0 (= infinity)");
    int alpha = valuation(a, p), beta = valuation(b, p);
    Rat u = unit_part(a, p), w = unit_part(b, p);
    if (p != 2) {
        int s = 1;
        if (beta % 2 != 0) s *= legendre(u, p);
        if (alpha % 2 != 0) s *= legendre(w, p);
        if (alpha % 2 != 0 && beta % 2 != 0 && (p % 4) == 3) s = -s;
        return s;
    }
    auto eps = [](const Rat& x) { return (mod8(x) % 4 == 3) ? 1 : 0; };  // (x-1)/2 mod 2
    auto omega = [](const Rat& x) {
        Int m = mod8(x);
        return (m == 3 || m == 5) ? 1 : 0;  // (x^2-1)/8 mod 2
    };
    int e = eps(u) * eps(w) + (alpha % 2 != 0 ? omega(w) : 0) + (beta % 2 != 0 ? omega(u) : 0);
    return e % 2 == 0 ? 1 : -1;
}

RamSet ramification(const QuaternionAlgebra& q) {
    require(q.a != 0 && q.b != 0, "quaternion symbol needs nonzero entries");
    std::set<Place> places{Int(0), Int(2)};
    for (const auto& [p, e] : factorize_rat(q.a)) places.insert(p);
    for (const auto& [p, e] : factorize_rat(q.b)) places.insert(p);
    RamSet ram;
    for (const auto& p : places)
        if (hilbert_symbol(q.a, q.b, p) == -1) ram.insert(p);
    require(ram.size() % 2 == 0, "ramification set has odd cardinality (symbol bug)");
    return ram;
}

bool quat_is_split(const QuaternionAlgebra& q) { return ramification(q).empty(); }

bool sum_of_two_squares(const Int& delta) {
    require(delta >= 1, "needs a positive integer");
    for (const auto& [p, e] : factorize(delta))
        if (p % 4 == 3 && e % 2 != 0) return false;
    return true;
}

RamSet brauer_tensor(const RamSet& r1, const RamSet& r2) {
    require(r1.size() % 2 == 0 && r2.size() % 2 == 0, "ramification sets must have even size");
    RamSet out;
    std::set_symmetric_difference(r1.begin(), r1.end(), r2.begin(), r2.end(),
                                  std::inserter(out, out.begin()));
    return out;
}

int hasse_invariant(const DiagonalQuadraticForm& f, const Place& p) {
    int s = 1;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        for (std::size_t j = i + 1; j < f.coefficients.size(); ++j)
            s *= hilbert_symbol(f.coefficients[i], f.coefficients[j], p);
    return s;
}

Rat squarefree_part(const Rat& r) {
    Rat out = r < 0 ? Rat(-1) : Rat(1);
    for (const auto& [p, e] : factorize_rat(r))
        if (e % 2 != 0) out *= Rat(p);
    return out;
}

Rat discriminant_class(const DiagonalQuadraticForm& f) {
    Rat d(1);
    for (const auto& c : f.coefficients) d *= c;
    return squarefree_part(d);
}

bool rational_equivalence(const DiagonalQuadraticForm& f1, const DiagonalQuadraticForm& f2) {
    if (f1.coefficients.size() != f2.coefficients.size()) return false;
    auto sig = [](const DiagonalQuadraticForm& f) {
        int pos = 0;
        for (const auto& c : f.coefficients)
            if (c > 0) ++pos;
        return pos;
    };
    if (sig(f1) != sig(f2)) return false;
    if (discriminant_class(f1) != discriminant_class(f2)) return false;
    std::set<Place> places{Int(0), Int(2)};
    for (const auto& f : {f1, f2})
        for (const auto& c : f.coefficients)
            for (const auto& [p, e] : factorize_rat(c)) places.insert(p);
    for (const auto& p : places)
        if (hasse_invariant(f1, p) != hasse_invariant(f2, p)) return false;
    return true;
}

EvenClifford even_clifford(const DiagonalQuadraticForm& f) {
    const auto& a = f.coefficients;
    for (const auto& c : a) require(c != 0, "diagonal coefficients must be nonzero");
    EvenClifford out;
    out.rank = static_cast<int>(a.size());
    switch (a.size()) {
        case 2:
            // Cl+(<a1> + <a2>) = Q(sqrt(-a1 a2))
            out.center_disc = squarefree_part(-a[0] * a[1]);
            return out;
        case 3:
            out.symbols = {{-a[0] * a[1], -a[1] * a[2]}};
            out.brauer = ramification({out.symbols[0].first, out.symbols[0].second});
            return out;
        case 4: {
            out.symbols = {{-a[0] * a[1], -a[1] * a[3]}};
            Rat d(1);
            for (const auto& c : a) d *= c;
            out.center_disc = squarefree_part(d);  // (-1)^4 * product
            return out;
        }
        case 5: {
            out.symbols = {{-a[0] * a[1], -a[1] * a[2]},
                           {a[0] * a[1] * a[2] * a[3], -a[3] * a[4]}};
            out.brauer = brauer_tensor(
                ramification({out.symbols[0].first, out.symbols[0].second}),
                ramification({out.symbols[1].first, out.symbols[1].second}));
            return out;
        }
        default:
            throw precondition_error("even clifford supports rank 2..5 only");
    }
}

KSReport kuga_satake_report(const Int& delta) {
    require(delta >= 1, "delta must be positive");
    KSReport r;
    r.delta = delta;
    DiagonalQuadraticForm q{{Rat(2), Rat(-2), Rat(-2), Rat(-2), Rat(2) * Rat(delta)}};
    r.clifford_class = even_clifford(q).brauer;
    r.minus_one_delta = ramification({Rat(-1), Rat(delta)});
    require(r.clifford_class == r.minus_one_delta,
            "clifford class differs from (-1,delta) (internal cross-check)");
    r.is_split = r.minus_one_delta.empty();
    bool two_squares = sum_of_two_squares(delta);
    require(r.is_split == two_squares, "splitness disagrees with the two-squares criterion");
    r.ks_dimension = 16;
    r.decomposition = "A(T_" + delta.str() + ") ~ A_" + delta.str() + "^2";
    return r;
}

} // namespace k3lat
