#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3lat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// representative of r mod m in [0, m), m > 0
inline Rat mod_reduce(const Rat& r, const Rat& m) {
    Int n = num(r) * den(m), d = den(r) * num(m);
    Int q = n / d;
    Rat red = r - Rat(q) * m;
    if (red < 0) red += m;
    return red;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

// parse "p" or "p/q" into a rational
Rat parse_rat(const std::string& s);

// deterministic xorshift generator for reproducible randomized tests
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace k3lat
