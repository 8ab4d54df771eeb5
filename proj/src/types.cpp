#include "toricsym/types.hpp"

#include <sstream>

namespace toricsym {

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

RatVector to_rational(const LatticePoint& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(static_cast<long>(v[i]));
    return out;
}

IntVector to_integer(const LatticePoint& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Integer(static_cast<long>(v[i]));
    return out;
}

LatticePoint to_lattice_point(const IntVector& v) {
    LatticePoint out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p()) throw ValidationError("coordinate does not fit in 64 bits");
        out[i] = v[i].get_si();
    }
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {
template <typename V>
std::string join(const V& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        if constexpr (std::is_same_v<typename V::value_type, Rational>)
            os << to_string(v[i]);
        else if constexpr (std::is_same_v<typename V::value_type, Integer>)
            os << v[i].get_str();
        else
            os << v[i];
    }
    os << ')';
    return os.str();
}
}  // namespace

std::string to_string(const RatVector& v) { return join(v); }
std::string to_string(const IntVector& v) { return join(v); }
std::string to_string(const LatticePoint& v) { return join(v); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace toricsym
