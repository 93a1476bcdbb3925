#pragma once

#include "sbc/partition.hpp"

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <vector>

namespace sbc {

// Closed-form families of partition sets with O(|lambda|) membership:
//   Full(n)          all partitions of n
//   PuncturedFull(n) Full(n) minus the conjugate closure of (n-1,1), n >= 3
//   Box(n,t)         partitions fitting a t x t square
//   PuncturedBox(n,t) Box(n,t) minus the conjugate closure of
//                    (t, n-t-1, 1) and (t, 2, 1^{n-t-2}), for n/2 < t <= n-2
//   Explicit(n,...)  a sorted list
// Every variant is closed under conjugation; Explicit sets can be checked.
class SymbolicPartitionSet {
public:
    enum class Kind { Full, PuncturedFull, Box, PuncturedBox, Explicit };

    static SymbolicPartitionSet full(long long n);
    static SymbolicPartitionSet punctured_full(long long n);
    static SymbolicPartitionSet box(long long n, long long t);
    static SymbolicPartitionSet punctured_box(long long n, long long t);
    // `require_conjugation_closed` verifies closure at build time.
    static SymbolicPartitionSet explicit_set(long long n, std::vector<Partition> members,
                                             bool require_conjugation_closed = false);

    Kind kind() const { return kind_; }
    long long n() const { return n_; }
    long long t() const { return t_; }  // Box/PuncturedBox width parameter
    const std::vector<Partition>& members() const { return members_; }  // Explicit only

    bool contains(const Partition& lambda) const;  // throws on size mismatch

    // Explicit listing in descending lex order; n must be <= cap.
    std::vector<Partition> materialize(long long cap = 200) const;

    // "P(25)", "oP(25)", "B(25,20)", "oB(25,20)", "{[3,1],[2,2]}"
    std::string to_string() const;
    static SymbolicPartitionSet parse(std::string_view text);

    nlohmann::json to_json() const;

    bool operator==(const SymbolicPartitionSet&) const = default;

private:
    SymbolicPartitionSet(Kind k, long long n, long long t) : kind_(k), n_(n), t_(t) {}
    Kind kind_;
    long long n_;
    long long t_ = 0;
    std::vector<Partition> members_;
};

} // namespace sbc
