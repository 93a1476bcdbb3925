#include "sbc/omega.hpp"

#include "sbc/lr.hpp"

#include <algorithm>
#include <cassert>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace sbc {

namespace {

void require_prime_ge_5(int p) {
    if (p < 5)
        throw std::invalid_argument("constituent-set results require p >= 5 (p in {2,3} is open)");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be prime");
}

long long pk(int p, int k) {
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    return n;
}

bool is_prime_power_of(int p, long long n) {
    if (n < static_cast<long long>(p)) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

// All pairs of people in the subtree have a 0-labelled closest common
// ancestor. Equivalently: no person has a person below it, and no vertex
// with nonzero label has people in two or more child subtrees (or is itself
// a person with people below).
bool zero_ancestor_rec(const LabelledTree& t, long long& people) {
    if (t.is_empty()) { people = 0; return true; }
    int label = t.root_label();
    bool person = label >= 1 && label <= t.p() - 1;
    people = person ? 1 : 0;
    if (t.k() == 1) return true;
    long long branches_with_people = 0;
    for (const auto& c : t.children()) {
        long long sub = 0;
        if (!zero_ancestor_rec(c, sub)) return false;
        if (sub > 0) ++branches_with_people;
        people += sub;
    }
    if (label != 0) {
        if (person && people > 1) return false;           // person above people
        if (!person && branches_with_people >= 2) return false;  // label-p junction
    }
    return true;
}

} // namespace

std::string to_string(Membership m) {
    switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::Unknown: return "Unknown";
    }
    return {};
}

long long capital_M(const CharDescriptor& theta) {
    require_prime_ge_5(theta.p());
    return theta.n() - theta.gamma(0);
}

bool is_punctured(const CharDescriptor& theta) {
    require_prime_ge_5(theta.p());
    if (theta.value() != 1)
        throw std::invalid_argument("is_punctured requires a character of value 1");
    // Exactly one component carries people; it needs at least two of them
    // and pairwise 0-labelled closest common ancestors.
    const TreeOrbit* carrier = nullptr;
    for (const auto& c : theta.components()) {
        if (c.stats().eta == 0) continue;
        if (carrier) return false;
        carrier = &c;
    }
    if (!carrier || carrier->stats().eta < 2) return false;
    long long people = 0;
    return zero_ancestor_rec(carrier->canonical(), people);
}

long long little_m(const CharDescriptor& theta) {
    require_prime_ge_5(theta.p());
    long long base = theta.n() - theta.gamma(0) - theta.gamma(1);
    if (theta.value() == 0)
        return is_prime_power_of(theta.p(), theta.n()) ? base - 2 : base;
    if (theta.value() == 1 && is_punctured(theta)) return base - 1;
    return base;
}

long long OmegaDescription::inner_width() const {
    switch (kind) {
    case Kind::ExactSet:
        switch (set->kind()) {
        case SymbolicPartitionSet::Kind::Full: return n;
        case SymbolicPartitionSet::Kind::PuncturedFull: return n - 2;
        case SymbolicPartitionSet::Kind::Box: return set->t();
        case SymbolicPartitionSet::Kind::PuncturedBox: return set->t() - 1;
        default: throw std::logic_error("inner_width of explicit set");
        }
    case Kind::ExactLayered:
    case Kind::Bounded:
        return inner;
    }
    return 0;
}

long long OmegaDescription::outer_width() const {
    switch (kind) {
    case Kind::ExactSet:
        switch (set->kind()) {
        case SymbolicPartitionSet::Kind::Full:
        case SymbolicPartitionSet::Kind::PuncturedFull: return n;
        case SymbolicPartitionSet::Kind::Box:
        case SymbolicPartitionSet::Kind::PuncturedBox: return set->t();
        default: throw std::logic_error("outer_width of explicit set");
        }
    case Kind::ExactLayered:
    case Kind::Bounded:
        return outer;
    }
    return 0;
}

bool OmegaDescription::contains(const Partition& lambda) const {
    if (lambda.n() != n) throw std::invalid_argument("membership query with |lambda| != n");
    switch (kind) {
    case Kind::ExactSet:
        return set->contains(lambda);
    case Kind::ExactLayered: {
        if (lambda.empty()) return false;
        if (lambda.normalized_width() <= inner) return true;
        // the layer: (outer, mu) with mu in tail, or its conjugate
        if (lambda.first() == outer && static_cast<long long>(lambda.length()) <= outer) {
            std::vector<long long> rest(lambda.parts().begin() + 1, lambda.parts().end());
            if (tail->contains(Partition{std::move(rest)})) return true;
        }
        Partition conj = lambda.conjugate();
        if (conj.first() == outer && static_cast<long long>(conj.length()) <= outer) {
            std::vector<long long> rest(conj.parts().begin() + 1, conj.parts().end());
            if (tail->contains(Partition{std::move(rest)})) return true;
        }
        return false;
    }
    case Kind::Bounded:
        throw std::logic_error("contains() on a bounded shape; use omega_member");
    }
    return false;
}

std::vector<Partition> OmegaDescription::materialize(long long cap) const {
    if (kind == Kind::Bounded)
        throw std::logic_error("materialize() on a bounded shape");
    std::vector<Partition> out;
    for (auto& lam : enumerate_partitions(n, cap))
        if (contains(lam)) out.push_back(std::move(lam));
    return out;
}

std::string OmegaDescription::to_string() const {
    switch (kind) {
    case Kind::ExactSet:
        return set->to_string();
    case Kind::ExactLayered:
        return "B(" + std::to_string(n) + "," + std::to_string(inner) + ") + layer{(" +
               std::to_string(outer) + ",mu) : mu in " + tail->to_string() + "}";
    case Kind::Bounded:
        return "B(" + std::to_string(n) + "," + std::to_string(inner) + ") <= . <= B(" +
               std::to_string(n) + "," + std::to_string(outer) + "), no thin outside inner";
    }
    return {};
}

nlohmann::json OmegaDescription::to_json() const {
    using nlohmann::json;
    switch (kind) {
    case Kind::ExactSet: {
        json j = set->to_json();
        j["exact"] = true;
        return j;
    }
    case Kind::ExactLayered:
        return json{{"kind", "layered"}, {"n", n},       {"inner", inner},
                    {"outer", outer},   {"tail", tail->to_json()}, {"exact", true}};
    case Kind::Bounded:
        return json{{"kind", "bounded"},
                    {"n", n},
                    {"inner", inner},
                    {"outer", outer},
                    {"no_thin_outside_inner", no_thin_outside_inner},
                    {"exact", false}};
    }
    return {};
}

namespace {

struct ComponentShape {
    SymbolicPartitionSet delta;  // exact inner family
    bool exact;
    long long outer;             // n_i - gamma0_i
    std::optional<OmegaDescription> layered;  // level-2 value-2 exact shape
};

ComponentShape component_shape(int p, const TreeOrbit& orbit) {
    TreeStats st = orbit.stats();
    long long n = pk(p, orbit.k());
    long long g0 = st.gamma.empty() ? 0 : st.gamma[0];
    long long g1 = st.gamma.size() > 1 ? st.gamma[1] : 0;
    if (st.value == 0) {
        // Constituents of the trivial character: the punctured set at prime
        // powers, everything otherwise. Taken as a known input fact rather
        // than derived here; the brute-force sweep re-checks it at desk scale.
        if (orbit.k() == 0)
            return {SymbolicPartitionSet::full(1), true, 1, std::nullopt};
        return {SymbolicPartitionSet::punctured_full(n), true, n, std::nullopt};
    }
    if (st.value == 1) {
        CharDescriptor single(p, {orbit});
        if (is_punctured(single))
            return {SymbolicPartitionSet::punctured_box(n, n - g0), true, n - g0, std::nullopt};
        return {SymbolicPartitionSet::box(n, n - g0), true, n - g0, std::nullopt};
    }
    if (st.value == 2 && orbit.k() == 2) {
        // Level-2 layered case: B(n, n-g0-g1) plus the closure of
        // { (n-g0, mu) : mu fits the (p-1)-box of size g0 }.
        OmegaDescription layered;
        layered.kind = OmegaDescription::Kind::ExactLayered;
        layered.n = n;
        layered.inner = n - g0 - g1;
        layered.outer = n - g0;
        layered.tail = SymbolicPartitionSet::box(g0, g0 - 1);
        return {SymbolicPartitionSet::box(n, n - g0 - g1), false, n - g0, layered};
    }
    return {SymbolicPartitionSet::box(n, n - g0 - g1), false, n - g0, std::nullopt};
}

} // namespace

OmegaDescription omega_shape(const CharDescriptor& theta) {
    require_prime_ge_5(theta.p());
    const auto& comps = theta.components();
    std::vector<ComponentShape> shapes;
    shapes.reserve(comps.size());
    for (const auto& c : comps) shapes.push_back(component_shape(theta.p(), c));

    if (shapes.size() == 1 && shapes[0].layered) return *shapes[0].layered;

    SymbolicPartitionSet delta = shapes[0].delta;
    bool exact = shapes[0].exact;
    long long outer = shapes[0].outer;
    for (std::size_t i = 1; i < shapes.size(); ++i) {
        delta = star_symbolic(delta, shapes[i].delta);
        exact = exact && shapes[i].exact;
        outer += shapes[i].outer;
    }

    OmegaDescription out;
    out.n = theta.n();
    if (exact) {
        out.kind = OmegaDescription::Kind::ExactSet;
        out.set = delta;
        return out;
    }
    // Any inexact component contributes a plain box, so the folded inner
    // family is a box; extras beyond it are never thin.
    assert(delta.kind() == SymbolicPartitionSet::Kind::Box ||
           delta.kind() == SymbolicPartitionSet::Kind::Full);
    out.kind = OmegaDescription::Kind::Bounded;
    out.inner = delta.t();
    out.outer = outer;
    out.no_thin_outside_inner = true;
    return out;
}

Membership omega_member(const CharDescriptor& theta, const Partition& lambda) {
    if (lambda.n() != theta.n())
        throw std::invalid_argument("omega_member: |lambda| != n");
    OmegaDescription shape = omega_shape(theta);
    if (shape.exact()) return shape.contains(lambda) ? Membership::In : Membership::Out;
    long long w = lambda.normalized_width();
    if (w <= shape.inner) return Membership::In;
    if (w > shape.outer) return Membership::Out;
    // Bounded shapes only arise for nontrivial characters: a thin partition
    // belongs iff its width is at most n - gamma0 - gamma1 = inner.
    if (lambda.is_thin()) return Membership::Out;
    return Membership::Unknown;
}

SymbolicPartitionSet omega_intersection_lower(int p, long long n) {
    require_prime_ge_5(p);
    return SymbolicPartitionSet::box(n, (p - 2) * n / p);
}

BoundaryMultiplicity boundary_multiplicity_claim(const CharDescriptor& theta) {
    require_prime_ge_5(theta.p());
    return theta.value() <= 1 ? BoundaryMultiplicity::One : BoundaryMultiplicity::AtLeastTwo;
}

GapReport gap_report(const CharDescriptor& theta) {
    GapReport r{};
    long long M = capital_M(theta);
    long long m = little_m(theta);
    r.gap = M - m;
    r.gamma1 = theta.gamma(1);
    r.c = r.gap - r.gamma1;
    if (r.c < 0 || r.c > 2) throw std::logic_error("gap decomposition outside {0,1,2}");
    long long p2 = static_cast<long long>(theta.p()) * theta.p();
    if ((r.gap - 2) * p2 > theta.n()) throw std::logic_error("gap exceeds n/p^2 + 2");
    return r;
}

} // namespace sbc
