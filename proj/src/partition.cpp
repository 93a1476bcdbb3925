#include "sbc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace sbc {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<long long> parts)
    : Partition(std::vector<long long>(parts)) {}

Partition Partition::conjugate() const {
    std::vector<long long> cols;
    if (parts_.empty()) return Partition{};
    cols.resize(static_cast<std::size_t>(parts_[0]));
    for (long long p : parts_)
        for (long long j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition{std::move(cols)};
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::operator+(const Partition& other) const {
    std::vector<long long> out(std::max(length(), other.length()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = part(i + 1) + other.part(i + 1);
    return Partition{std::move(out)};
}

bool Partition::is_thin() const {
    if (length() <= 2) return true;
    if (part(2) <= 1) return true;        // hook
    return first() <= 2;                  // conjugate of a two-row
}

long long Partition::normalized_width() const {
    if (parts_.empty())
        throw std::invalid_argument("normalized_width of the empty partition");
    return std::max<long long>(parts_[0], static_cast<long long>(parts_.size()));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition Partition::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> long long {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("expected integer in partition literal");
        return std::stoll(std::string(text.substr(start, i - start)));
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("partition literal must start with '['");
    ++i;
    std::vector<long long> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') { ++i; }
    else {
        for (;;) {
            long long p = read_int();
            long long rep = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') { ++i; rep = read_int(); skip_ws(); }
            if (rep < 0) throw std::invalid_argument("negative exponent in partition literal");
            parts.insert(parts.end(), static_cast<std::size_t>(rep), p);
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw std::invalid_argument("malformed partition literal");
        }
    }
    skip_ws();
    if (i != text.size())
        throw std::invalid_argument("trailing characters after partition literal");
    return Partition{std::move(parts)};
}

std::vector<Partition> enumerate_partitions(long long n, long long cap) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    if (n > cap) throw std::invalid_argument("enumerate_partitions: n exceeds cap");
    std::vector<Partition> out;
    std::vector<long long> cur;
    // Descending lexicographic: place the largest feasible first part first.
    auto rec = [&](auto&& self, long long rem, long long maxp) -> void {
        if (rem == 0) { out.emplace_back(cur); return; }
        for (long long p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

unsigned long long partition_count(long long n) {
    if (n < 0) return 0;
    // p(n, k) = number of partitions of n with parts <= k.
    std::size_t N = static_cast<std::size_t>(n);
    std::vector<std::vector<unsigned long long>> t(N + 1, std::vector<unsigned long long>(N + 1, 0));
    for (std::size_t k = 0; k <= N; ++k) t[0][k] = 1;
    for (std::size_t m = 1; m <= N; ++m)
        for (std::size_t k = 1; k <= N; ++k)
            t[m][k] = t[m][k - 1] + (m >= k ? t[m - k][k] : 0);
    return t[N][N == 0 ? 0 : N];
}

std::vector<Partition> conjugate_closure(std::span<const Partition> set) {
    std::set<Partition, DescLex> acc;
    for (const auto& p : set) {
        acc.insert(p);
        acc.insert(p.conjugate());
    }
    return {acc.begin(), acc.end()};
}

} // namespace sbc
