#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace domcert {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Partition entries are plain 64-bit integers.  Construction rejects entries
// above PART_LIMIT so that any product of an entry, a weight and a rank fits
// in 128 bits; quantities that genuinely grow without bound (representation
// dimensions, tensor multiplicities, cone coordinates) use Int or Rat.
using Part = std::int64_t;
using Wide = __int128;

inline constexpr Part PART_LIMIT = Part(1) << 40;

// Raised when a configured resource cap is hit; carries the cap name so
// callers can report which limit to raise.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(const std::string& cap, const std::string& detail)
        : std::runtime_error("cap exceeded: " + cap + " (" + detail + ")"), cap_(cap) {}
    const std::string& cap() const { return cap_; }

private:
    std::string cap_;
};

Int floor_rat(const Rat& q);  // largest integer <= q

Int lcm_upto(int l);          // lcm of 1..l
Part lcm_upto_part(int l);    // same value, rejected if above PART_LIMIT

Int numerator_int(const Rat& q);
Int denominator_int(const Rat& q);

std::string to_decimal(const Int& n);
std::string to_fraction(const Rat& q);        // "4/3", integers without "/1"
Rat parse_fraction(const std::string& text);

}  // namespace domcert
