#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbc {

// A partition of n: weakly decreasing sequence of positive integers.
// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);
    Partition(std::initializer_list<long long> parts);

    long long n() const { return n_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the length are 0.
    long long part(std::size_t i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }
    long long first() const { return parts_.empty() ? 0 : parts_[0]; }
    const std::vector<long long>& parts() const { return parts_; }

    Partition conjugate() const;

    // mu <= *this componentwise (mu a subpartition, i.e. its diagram fits inside).
    bool contains(const Partition& mu) const;

    // Componentwise sum, padding the shorter with zeros.
    Partition operator+(const Partition& other) const;

    // Hook, two-row, or conjugate of a two-row.
    bool is_thin() const;

    // max(first part, length); throws on the empty partition.
    long long normalized_width() const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on part lists; canonical list order is *descending* lex,
    // i.e. (n) first and (1^n) last.
    std::strong_ordering operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

    // "[6,2]"; "[]" for the empty partition.
    std::string to_string() const;
    // Accepts "[6,2]", "[4,1^3]", "[]", with optional whitespace.
    static Partition parse(std::string_view text);

private:
    std::vector<long long> parts_;
    long long n_ = 0;
};

// Comparator for the canonical descending-lex listing order.
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

inline Partition two_row(long long n, long long x) {
    std::vector<long long> v{x};
    if (n - x > 0) v.push_back(n - x);
    return Partition{std::move(v)};
}
inline Partition hook(long long n, long long y) {
    std::vector<long long> v{y};
    v.insert(v.end(), static_cast<std::size_t>(n - y), 1);
    return Partition{std::move(v)};
}

// All partitions of n in descending lexicographic order. n must lie in
// [0, cap]; the cap keeps accidental huge enumerations from running away.
std::vector<Partition> enumerate_partitions(long long n, long long cap = 200);

// Independent count via the bounded-part recurrence p(n) = sum_k p(n,k).
unsigned long long partition_count(long long n);

// A U {conjugates of A}, deduplicated.
std::vector<Partition> conjugate_closure(std::span<const Partition> set);

} // namespace sbc
