#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbc {

// Minimal arbitrary-precision nonnegative integer: enough for exact
// character degrees p^a and their decimal printing.
class BigNat {
public:
    BigNat() : limbs_{0} {}
    BigNat(unsigned long long v);

    static BigNat pow(unsigned long long base, unsigned long long exp);

    BigNat& operator*=(unsigned long long m);
    BigNat& operator+=(const BigNat& other);

    bool operator==(const BigNat&) const = default;

    bool fits_u64() const { return limbs_.size() <= 2; }
    unsigned long long to_u64() const;  // throws if too large
    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_;  // base 2^32, little-endian, no leading zeros (except the value 0)
    void trim();
};

} // namespace sbc
