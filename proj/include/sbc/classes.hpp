#pragma once

#include "sbc/cyclotomic.hpp"
#include "sbc/descriptor.hpp"
#include "sbc/partition.hpp"

#include <vector>

namespace sbc {

// One conjugacy class of a direct factor of P_n (a component of the p-adic
// decomposition). Level 0 is the trivial group; level 1 the cyclic group of
// order p; level 2 the wreath product C_p wr C_p with
//   base classes: rotation orbits of exponent tuples (stored minimal), and
//   skew classes: (j, s) with top power j in [1,p-1] and cycle-product
//   exponent s in [0,p-1], of size p^{p-1}.
struct ComponentClass {
    int level = 0;                 // 0, 1 or 2
    bool skew = false;             // level 2 only
    std::vector<int> base;         // level 1: {j}; level 2 base: tuple of p exponents
    int j = 0, s = 0;              // level 2 skew parameters
    long long size = 1;
    std::vector<long long> cycle_type;  // contribution to the S_n cycle type, descending
};

struct ConjClass {
    std::vector<ComponentClass> comps;  // one per component, ascending level
    long long size = 1;                 // product of component sizes
    Partition cycle_type;               // merged cycle type in S_n
    bool is_identity = false;
};

// Conjugacy classes of P_n = product of iterated wreath components. Requires
// every p-adic digit of n at exponent <= 2 (the supported oracle scale).
std::vector<ConjClass> conjugacy_classes(int p, long long n);

// |P_n| at oracle scale.
long long group_order(int p, long long n);

// Exact character value theta(g) as an element of Z[zeta_p]; theta and g
// must be over the same n. Linear components evaluate as root-of-unity
// monomials; induced components vanish on skew classes and sum over the
// cyclic rotations on base classes.
CyclotomicInt theta_value(const CharDescriptor& theta, const ConjClass& g);

// Brute-force cross-check of the level-2 class data: enumerates all p^{p+1}
// elements of C_p wr C_p as permutations of p^2 points, partitions them into
// conjugacy classes by generator closure, and compares count, sizes and
// cycle types against conjugacy_classes(p, p^2). Returns an empty string on
// success, else a description of the first mismatch.
std::string validate_level2_classes_by_enumeration(int p);

} // namespace sbc
