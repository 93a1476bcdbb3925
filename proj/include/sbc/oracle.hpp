#pragma once

#include "sbc/classes.hpp"
#include "sbc/descriptor.hpp"
#include "sbc/omega.hpp"
#include "sbc/partition.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace sbc {

// Character value of the symmetric group: chi^lambda at the given cycle
// type, by recursive border-strip removal on the beta-set (memoized).
long long mn_char(const Partition& lambda, const Partition& cycle_type);

// Number of standard Young tableaux of shape lambda, by corner-removal
// recursion; equals mn_char(lambda, (1^n)) and serves as an independent
// route to character degrees.
long long dim_syt(const Partition& lambda);

// Sylow branching coefficient [chi^lambda restricted to P_n, theta], as an
// exact class-sum inner product over Z[zeta_p]. Throws when the cyclotomic
// sum fails to be a nonnegative rational integer multiple of |P_n|.
long long restriction_mult(const Partition& lambda, const CharDescriptor& theta);

// The full multiplicity matrix [lambda][theta] over the given partitions and
// characters, computed with the class sums grouped by cycle type and spread
// over `threads` workers. Same values as restriction_mult entrywise.
std::vector<std::vector<long long>>
branching_matrix(std::span<const Partition> lambdas, std::span<const CharDescriptor> thetas,
                 int threads = 0);

// All constituents of the induction of theta: partitions with positive
// branching coefficient. Requires oracle scale and n small enough to
// enumerate all partitions.
std::vector<Partition> omega_oracle(const CharDescriptor& theta);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerificationReport {
    int p = 5;
    long long n = 0;
    std::string subject;  // a character, or "Irr(P_n)" for sweeps
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;
    bool ok() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Brute-force constituents of one character versus the closed-form shape:
// set equality for exact shapes; inner/outer containment, absence of thin
// partitions outside the inner box, and the boundary multiplicity claims
// for bounded shapes.
VerificationReport verify_theta(const CharDescriptor& theta);

// Sweep verification at n in {5, 25}: every character's constituent set
// against its closed-form shape, boundary multiplicities, equal multiplicity
// vectors across 0p-equivalent characters, column completeness
// (sum over theta of mult * degree = dim chi^lambda), conjugation symmetry,
// and class-table consistency.
// At n = 30 the sweep checks the certified intersection subset instead:
// every thin partition of width <= (p-2)n/p and a seeded sample of the box
// have positive multiplicity for all 3245 characters.
VerificationReport verify_sweep(int p, long long n, unsigned long long seed = 12345,
                                int threads = 0);

} // namespace sbc
