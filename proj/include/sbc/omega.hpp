#pragma once

#include "sbc/descriptor.hpp"
#include "sbc/partition.hpp"
#include "sbc/symbolic_set.hpp"

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

namespace sbc {

// Three-valued membership for constituent sets that are only known up to
// inner/outer bounds.
enum class Membership { In, Out, Unknown };
std::string to_string(Membership m);

// Shape of the constituent set Omega(theta):
//   ExactSet      a symbolic family, exactly
//   ExactLayered  B(n, inner) together with the closure of the layer
//                 { (outer, mu) : mu in tail }, exactly
//   Bounded       B(n, inner) <= Omega <= B(n, outer), with no thin
//                 partitions outside the inner box
struct OmegaDescription {
    enum class Kind { ExactSet, ExactLayered, Bounded };
    Kind kind;
    long long n = 0;
    std::optional<SymbolicPartitionSet> set;   // ExactSet
    long long inner = 0;                       // ExactLayered / Bounded
    long long outer = 0;                       // ExactLayered / Bounded
    std::optional<SymbolicPartitionSet> tail;  // ExactLayered: Box over n - outer
    bool no_thin_outside_inner = false;        // Bounded (always true when set)

    bool exact() const { return kind != Kind::Bounded; }
    // Largest t with B(n,t) contained in the described set, and smallest t
    // containing it.
    long long inner_width() const;
    long long outer_width() const;
    // Exact variants only.
    bool contains(const Partition& lambda) const;
    std::vector<Partition> materialize(long long cap = 200) const;

    std::string to_string() const;
    nlohmann::json to_json() const;
};

// Tight outer box parameter: M(theta) = n - gamma_0(theta). Requires p >= 5.
long long capital_M(const CharDescriptor& theta);

// Tight inner box parameter m(theta):
//   n - gamma0 - gamma1 - 2 for the trivial character when n is a p-power,
//   n - gamma0 - gamma1 - 1 for punctured value-1 characters,
//   n - gamma0 - gamma1 otherwise.
long long little_m(const CharDescriptor& theta);

// Value-1 dichotomy: whether Omega(theta) is the punctured box rather than
// the full box. Exactly one component may carry people, all its pairs of
// people must have a 0-labelled closest common ancestor, and it needs at
// least two people. Requires value(theta) == 1.
bool is_punctured(const CharDescriptor& theta);

// Full shape of Omega(theta): exact for value <= 1 and for the layered
// level-2 case, inner/outer bounds otherwise; components are combined with
// the closed-form star product.
OmegaDescription omega_shape(const CharDescriptor& theta);

// Membership of lambda in Omega(theta), possibly Unknown for non-thin
// partitions in the undetermined band of a Bounded shape. Thin partitions
// are always decided (for nontrivial theta, a normalized thin partition
// lies in Omega(theta) iff its width is at most n - gamma0 - gamma1).
Membership omega_member(const CharDescriptor& theta, const Partition& lambda);

// A certified subset of the intersection of Omega(theta) over all theta:
// Box(n, floor((p-2)/p * n)).
SymbolicPartitionSet omega_intersection_lower(int p, long long n);

struct GapReport {
    long long gap;     // M - m
    long long gamma1;
    long long c;       // gap - gamma1, in {0, 1, 2}
};
GapReport gap_report(const CharDescriptor& theta);

// Predicted multiplicity at the extreme thin constituents (the two-row and
// hook of width n - gamma0 - gamma1 and their conjugates) when n is a power
// of p: exactly 1 for characters of value <= 1, at least 2 for value >= 2.
// The formula path carries no multiplicities, so the prediction is only
// checkable through the brute-force inner products.
enum class BoundaryMultiplicity { One, AtLeastTwo };
BoundaryMultiplicity boundary_multiplicity_claim(const CharDescriptor& theta);

} // namespace sbc
