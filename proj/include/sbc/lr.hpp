#pragma once

#include "sbc/partition.hpp"
#include "sbc/symbolic_set.hpp"

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sbc {

// Littlewood-Richardson coefficient LR(lambda; mu, nu): the number of
// column-strict fillings of the skew shape lambda/mu with content nu whose
// reverse reading word is a lattice word. Symmetric in mu and nu.
// Memoized; requires |mu| + |nu| = |lambda|.
long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// Expansion of the skew character for lambda/mu: map nu -> LR(lambda; mu, nu)
// over all nu with nonzero coefficient.
std::map<Partition, long long, DescLex> skew_expand(const Partition& lambda, const Partition& mu);

// Product expansion: map lambda -> LR(lambda; mu, nu). Independent route from
// lr_coeff (horizontal-strip insertion instead of skew-tableau search).
std::map<Partition, long long, DescLex> mult_expand(const Partition& mu, const Partition& nu);

// Iterated coefficient LR(lambda; mu^1, ..., mu^t), the multiplicity of the
// outer tensor product of the factors in the restriction of lambda to the
// Young subgroup with block sizes |mu^i|. Left fold over the factors.
long long lr_multi(const Partition& lambda, std::span<const Partition> factors);

// All factor tuples with nonzero lr_multi for the given block sizes,
// with multiplicities, sorted lexicographically.
std::vector<std::pair<std::vector<Partition>, long long>>
restrict_to_young(const Partition& lambda, std::span<const long long> blocks);

// A * B: partitions lambda with LR(lambda; mu, nu) > 0 for some mu in A,
// nu in B. All members of A (resp. B) must have equal size.
std::vector<Partition> star_explicit(std::span<const Partition> a, std::span<const Partition> b);

// Thrown by star_symbolic when the operand pair is outside the proven
// closed forms; callers should fall back to star_explicit.
struct StarHypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

// Closed-form star product on the symbolic families:
//   B*B -> B    B*P -> B     B*oP -> B    B*oB -> B
//   P*P -> P    P*oP -> P    oP*oP -> P
//   P*oB -> oB  oP*oB -> oB  oB*oB -> B
// with summed parameters, subject to the parameter hypotheses of each form.
SymbolicPartitionSet star_symbolic(const SymbolicPartitionSet& s1, const SymbolicPartitionSet& s2);

// M(q, A): partitions lambda of q*|A-member| admitting a *mixed* (not all
// equal) q-tuple from A with LR(lambda; mu^1,...,mu^q) > 0.
std::vector<Partition> mixed_set(long long q, std::span<const Partition> a);

// Size of the shared LR memo cache, and manual reset (mainly for tests).
std::size_t lr_cache_size();
void lr_cache_clear();

} // namespace sbc
