#include "core/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace domcert {

Int floor_rat(const Rat& q) {
    Int num = numerator_int(q);
    Int den = denominator_int(q);
    Int quot = num / den;
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

Int lcm_upto(int l) {
    if (l < 1) throw std::invalid_argument("lcm_upto: argument must be at least 1");
    Int acc = 1;
    for (int k = 2; k <= l; ++k) acc = boost::multiprecision::lcm(acc, Int(k));
    return acc;
}

Part lcm_upto_part(int l) {
    Int value = lcm_upto(l);
    if (value > PART_LIMIT) throw cap_exceeded("part magnitude", "lcm_upto(" + std::to_string(l) + ")");
    return value.convert_to<Part>();
}

Int numerator_int(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
Int denominator_int(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

std::string to_decimal(const Int& n) { return n.str(); }

std::string to_fraction(const Rat& q) {
    Int den = denominator_int(q);
    if (den == 1) return numerator_int(q).str();
    return numerator_int(q).str() + "/" + den.str();
}

Rat parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_fraction: bad rational '" + text + "'");
    }
}

}  // namespace domcert
