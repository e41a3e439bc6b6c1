#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace k3lat {

std::size_t PolyCtx::index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw input_error("unknown variable: " + name);
}

Poly Poly::constant(PolyCtxPtr ctx, const Rat& c) {
    Poly p(std::move(ctx));
    if (c != 0) p.terms_[Expo(p.ctx_->size(), 0)] = c;
    return p;
}

Poly Poly::variable(PolyCtxPtr ctx, const std::string& name, int power) {
    Poly p(ctx);
    Expo e(ctx->size(), 0);
    e[ctx->index(name)] = power;
    p.terms_[e] = 1;
    return p;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(ctx_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(ctx_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Poly Poly::pow(int e) const {
    require(e >= 0, "negative polynomial power");
    Poly r = constant(ctx_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& subs) const {
    std::vector<std::optional<std::size_t>> subbed(ctx_->size());
    std::vector<const Poly*> repl(ctx_->size(), nullptr);
    for (const auto& [name, p] : subs) repl[ctx_->index(name)] = &p;
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        Poly term = constant(ctx_, c);
        Expo rest(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (repl[i])
                term = term * repl[i]->pow(e[i]);
            else
                rest[i] = e[i];
        }
        Poly mono(ctx_);
        mono.terms_[rest] = 1;
        r = r + term * mono;
    }
    return r;
}

Rat Poly::eval(const std::map<std::string, Rat>& point) const {
    std::vector<Rat> vals(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        auto it = point.find(ctx_->name(i));
        require(it != point.end(), "missing value for " + ctx_->name(i));
        vals[i] = it->second;
    }
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        s += t;
    }
    return s;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

int Poly::degree_in(const std::string& var) const {
    std::size_t i = ctx_->index(var);
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

Poly Poly::coefficient_of(const std::string& var, int k) const {
    std::size_t i = ctx_->index(var);
    Poly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Expo rest = e;
        rest[i] = 0;
        r.add_term(rest, c);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Rat a = c < 0 ? Rat(-c) : c;
        bool printed = false;
        if (a != 1) {
            os << to_string(a);
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << ctx_->name(i);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << to_string(a);
    }
    return os.str();
}

namespace {

Rat content(const Poly& p) {
    Int g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        g = gcd_int(g, num(c));
        l = l / gcd_int(l, den(c)) * den(c);
    }
    if (g == 0) return Rat(1);
    return Rat(g) / Rat(l);
}

} // namespace

RationalFunction::RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    require(!den.is_zero(), "rational function with zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(den.ctx(), 1);
        return;
    }
    // divide out the common rational content
    Rat cn = content(num), cd = content(den);
    Int n1 = boost::multiprecision::abs(k3lat::num(cn));
    Int n2 = boost::multiprecision::abs(k3lat::num(cd));
    Int d1 = k3lat::den(cn), d2 = k3lat::den(cd);
    Rat g = Rat(gcd_int(n1, n2)) / Rat(d1 / gcd_int(d1, d2) * d2);
    num = num * (Rat(1) / g);
    den = den * (Rat(1) / g);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num * o.den + o.num * den, den * o.den};
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {num * o.den - o.num * den, den * o.den};
}
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num * o.num, den * o.den};
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    require(!o.num.is_zero(), "division by the zero rational function");
    return {num * o.den, den * o.num};
}
bool RationalFunction::equals(const RationalFunction& o) const {
    return (num * o.den - o.num * den).is_zero();
}

} // namespace k3lat
