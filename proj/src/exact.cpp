#include "exact.hpp"

namespace k3lat {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw input_error("zero denominator: " + s);
        return Rat(n) / Rat(d);
    } catch (const std::exception&) {
        throw input_error("cannot parse rational: " + s);
    }
}

} // namespace k3lat
