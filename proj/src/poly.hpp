#pragma once

#include "exact.hpp"
#include <map>
#include <memory>
#include <vector>

namespace k3lat {

// shared variable universe for a family of polynomials
class PolyCtx {
  public:
    explicit PolyCtx(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    std::size_t index(const std::string& name) const;

  private:
    std::vector<std::string> vars_;
};

using PolyCtxPtr = std::shared_ptr<const PolyCtx>;

// sparse multivariate polynomial with exact rational coefficients; no zero
// coefficients stored, terms kept in canonical (lexicographic) order
class Poly {
  public:
    using Expo = std::vector<int>;

    Poly() = default;  // the zero polynomial in an anonymous empty context
    explicit Poly(PolyCtxPtr ctx) : ctx_(std::move(ctx)) {}
    static Poly constant(PolyCtxPtr ctx, const Rat& c);
    static Poly variable(PolyCtxPtr ctx, const std::string& name, int power = 1);

    const PolyCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly pow(int e) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // substitute polynomials for a subset of variables
    Poly substitute(const std::map<std::string, Poly>& subs) const;
    Rat eval(const std::map<std::string, Rat>& point) const;

    int degree() const;
    int degree_in(const std::string& var) const;
    // coefficient (a polynomial in the remaining variables) of var^k
    Poly coefficient_of(const std::string& var, int k) const;

    std::string str() const;

    void add_term(const Expo& e, const Rat& c);

  private:
    PolyCtxPtr ctx_;
    std::map<Expo, Rat> terms_;
};

// quotient of polynomials; denominator nonzero; gcd reduction limited to
// rational content, equality by cross-multiplication
struct RationalFunction {
    Poly num, den;

    RationalFunction(Poly n, Poly d);
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool equals(const RationalFunction& o) const;  // cross-multiplication
};

} // namespace k3lat
