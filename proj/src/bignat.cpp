#include "sbc/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbc {

BigNat::BigNat(unsigned long long v) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffULL));
    limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    trim();
}

void BigNat::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::operator*=(unsigned long long m) {
    // m fits in 32 bits after splitting; multiply by lo and hi separately.
    std::uint32_t lo = static_cast<std::uint32_t>(m & 0xffffffffULL);
    std::uint32_t hi = static_cast<std::uint32_t>(m >> 32);
    std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
    auto addmul = [&](std::uint32_t f, std::size_t shift) {
        if (f == 0) return;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(limbs_[i]) * f + out[i + shift] + carry;
            out[i + shift] = static_cast<std::uint32_t>(t & 0xffffffffULL);
            carry = t >> 32;
        }
        std::size_t pos = limbs_.size() + shift;
        while (carry) {
            std::uint64_t t = static_cast<std::uint64_t>(out[pos]) + carry;
            out[pos] = static_cast<std::uint32_t>(t & 0xffffffffULL);
            carry = t >> 32;
            ++pos;
        }
    };
    addmul(lo, 0);
    addmul(hi, 1);
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigNat& BigNat::operator+=(const BigNat& other) {
    limbs_.resize(std::max(limbs_.size(), other.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(limbs_[i]) + carry +
                          (i < other.limbs_.size() ? other.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(t & 0xffffffffULL);
        carry = t >> 32;
    }
    trim();
    return *this;
}

BigNat BigNat::pow(unsigned long long base, unsigned long long exp) {
    BigNat r{1};
    for (unsigned long long i = 0; i < exp; ++i) r *= base;
    return r;
}

unsigned long long BigNat::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigNat::to_u64: value too large");
    unsigned long long v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<unsigned long long>(limbs_[1]) << 32;
    return v;
}

std::string BigNat::to_string() const {
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    auto all_zero = [&] {
        return std::all_of(work.begin(), work.end(), [](std::uint32_t x) { return x == 0; });
    };
    if (all_zero()) return "0";
    while (!all_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    return {digits.rbegin(), digits.rend()};
}

} // namespace sbc
