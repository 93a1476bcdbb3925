#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbc {

// Exact element of Z[zeta_p] for prime p, in the power basis
// 1, zeta, ..., zeta^{p-2} with zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
// The reduced coordinate vector is unique.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {}
    CyclotomicInt(int p, long long integer) : CyclotomicInt(p) { c_[0] = integer; }

    // zeta^e (any integer exponent), reduced.
    static CyclotomicInt root_power(int p, long long e);

    int p() const { return p_; }
    const std::vector<long long>& coords() const { return c_; }

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt& operator*=(long long s);

    // Complex conjugation: zeta -> zeta^{-1}.
    CyclotomicInt conjugate() const;

    bool is_zero() const;
    bool is_rational_integer() const;   // all coordinates above the constant vanish
    long long rational_part() const;    // valid when is_rational_integer()

    bool operator==(const CyclotomicInt&) const = default;
    std::string to_string() const;

private:
    int p_;
    std::vector<long long> c_;
};

} // namespace sbc
