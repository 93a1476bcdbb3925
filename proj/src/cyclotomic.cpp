#include "sbc/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbc {

CyclotomicInt CyclotomicInt::root_power(int p, long long e) {
    CyclotomicInt z(p);
    long long r = ((e % p) + p) % p;
    if (r < p - 1)
        z.c_[static_cast<std::size_t>(r)] = 1;
    else
        for (auto& c : z.c_) c = -1;  // zeta^{p-1} = -(1 + ... + zeta^{p-2})
    return z;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("cyclotomic arity mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("cyclotomic arity mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    return r += o;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    return r -= o;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("cyclotomic arity mismatch");
    // Multiply modulo zeta^p = 1, then reduce the zeta^{p-1} coordinate.
    std::vector<long long>
        full(static_cast<std::size_t>(p_), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            full[(i + j) % static_cast<std::size_t>(p_)] += c_[i] * o.c_[j];
    }
    CyclotomicInt r(p_);
    long long top = full[static_cast<std::size_t>(p_ - 1)];
    for (std::size_t i = 0; i + 1 < full.size(); ++i) r.c_[i] = full[i] - top;
    return r;
}

CyclotomicInt& CyclotomicInt::operator*=(long long s) {
    for (auto& c : c_) c *= s;
    return *this;
}

CyclotomicInt CyclotomicInt::conjugate() const {
    CyclotomicInt r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        CyclotomicInt term = root_power(p_, -static_cast<long long>(i));
        term *= c_[i];
        r += term;
    }
    return r;
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

bool CyclotomicInt::is_rational_integer() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](long long v) { return v == 0; });
}

long long CyclotomicInt::rational_part() const {
    if (!is_rational_integer())
        throw std::logic_error("cyclotomic value is not a rational integer");
    return c_[0];
}

std::string CyclotomicInt::to_string() const {
    std::string s;
    bool any = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) s += c_[i] > 0 ? " + " : " - ";
        else if (c_[i] < 0) s += "-";
        long long mag = c_[i] < 0 ? -c_[i] : c_[i];
        if (mag != 1 || i == 0) s += std::to_string(mag);
        if (i > 0) {
            if (mag != 1) s += "*";
            s += "z";
            if (i > 1) s += "^" + std::to_string(i);
        }
        any = true;
    }
    return any ? s : "0";
}

} // namespace sbc
