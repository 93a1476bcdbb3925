#pragma once

#include "sbc/bignat.hpp"
#include "sbc/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sbc {

// An irreducible character of the Sylow p-subgroup of S_n, encoded as one
// admissible tree orbit per summand of the p-adic expansion
// n = sum p^{k_i} (exponents ascending, each repeated at most p-1 times).
// Components with equal exponent are kept sorted, which identifies
// characters that differ only by reordering equal-exponent factors; all
// quantities computed here are invariant under such reordering.
class CharDescriptor {
public:
    CharDescriptor(int p, std::vector<TreeOrbit> components);

    // The trivial character of P_n.
    static CharDescriptor trivial(int p, long long n);

    int p() const { return p_; }
    long long n() const { return n_; }
    const std::vector<TreeOrbit>& components() const { return components_; }
    std::vector<int> exponents() const;

    const TreeStats& stats() const { return stats_; }
    long long eta() const { return stats_.eta; }
    long long gamma(std::size_t i) const {
        return i < stats_.gamma.size() ? stats_.gamma[i] : 0;
    }
    // Tuple value: the maximum of the component values.
    long long value() const { return value_; }
    bool is_trivial() const { return stats_.eta == 0 && stats_.degree_exponent == 0; }

    BigNat degree() const { return BigNat::pow(static_cast<unsigned long long>(p_),
                                               static_cast<unsigned long long>(stats_.degree_exponent)); }

    bool operator==(const CharDescriptor& o) const {
        return p_ == o.p_ && components_ == o.components_;
    }
    std::strong_ordering operator<=>(const CharDescriptor& o) const {
        if (auto c = p_ <=> o.p_; c != 0) return c;
        return components_ <=> o.components_;
    }

    std::string to_string() const;  // components joined by " * "

    // Equal placement of 0-labels and p-labels, componentwise up to
    // reordering within equal exponents. Shape mismatch compares false.
    bool equivalent_0p(const CharDescriptor& other) const;
    // The componentwise people-collapsed form; equivalent_0p compares these.
    std::vector<TreeOrbit> collapsed_components() const;

    // Parse "X(1;1;0)", "2 * X(1;0)", "(0|0|0|0|1;5)", "() * 3", ...
    static CharDescriptor parse(int p, std::string_view text);

private:
    int p_;
    long long n_ = 0;
    std::vector<TreeOrbit> components_;
    TreeStats stats_;
    long long value_ = 0;
};

// Descriptor from explicit orbits; validates that the orbit levels match the
// p-adic expansion of n.
CharDescriptor p_adic_descriptor(int p, long long n, std::vector<TreeOrbit> orbits);

// All characters of P_n up to reordering of equal-exponent components, in a
// deterministic order. Throws when the count exceeds `guard`.
std::vector<CharDescriptor> enumerate_irr_n(int p, long long n,
                                            unsigned long long guard = 10'000'000);

// Exponents of the p-adic expansion of n, ascending, with multiplicity.
std::vector<int> p_adic_exponents(int p, long long n);

} // namespace sbc
