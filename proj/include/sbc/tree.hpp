#pragma once

#include "sbc/bignat.hpp"

#include <compare>
#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbc {

// Combinatorial statistics of a labelled tree (or tuple of trees): label
// counts, the "people" (vertices with label in [1,p-1]) graded by the depth
// of their chains of human descendants, and the derived value.
struct TreeStats {
    long long eta = 0;                  // number of people
    std::vector<long long> gamma;       // gamma[i] = people whose longest human
                                        // descendant chain has exactly i generations
    long long value = 0;                // min { i : gamma[i] == 0 }
    long long degree_exponent = 0;      // number of vertices labelled p
    std::vector<long long> label_counts;  // per label 0..p
};

// A rooted complete p-ary tree of height k-1 with vertex labels in [0, p],
// stored as the preorder label sequence. k = 0 denotes the empty tree (the
// encoding of the trivial group's unique character).
class LabelledTree {
public:
    LabelledTree(int p, int k, std::vector<int> preorder_labels);
    static LabelledTree leaf(int p, int label);            // k = 1
    static LabelledTree node(int label, std::span<const LabelledTree> children);
    static LabelledTree empty(int p);                      // k = 0
    // All-equal children under one root label, iterated: X(l0; l1; ...; lk).
    static LabelledTree linear(int p, std::span<const int> labels);

    int p() const { return p_; }
    int k() const { return k_; }  // number of levels; height is k-1
    bool is_empty() const { return k_ == 0; }
    int root_label() const;
    const std::vector<int>& preorder() const { return pre_; }
    std::size_t vertex_count() const { return pre_.size(); }
    std::vector<LabelledTree> children() const;

    // Cyclically rotate the root's children by r (new first child = old child r).
    LabelledTree rotated(int r) const;

    // Minimal orbit representative under independent cyclic rotations of the
    // child lists at every internal vertex; total order is lexicographic on
    // preorder label sequences.
    LabelledTree canonicalized() const;

    // Leaves labelled in [0,p-1]; internal vertices with label in [0,p-1]
    // have all child subtrees in one orbit, with label p a mixed child list.
    bool is_admissible() const;

    TreeStats stats() const;

    // Labels 1..p-1 collapsed to one sentinel, then canonicalized.
    LabelledTree people_collapsed() const;

    bool operator==(const LabelledTree&) const = default;
    std::strong_ordering operator<=>(const LabelledTree& o) const;

    std::string to_string() const;  // "(1|1|1|1|1;0)", "3", "()"
    nlohmann::json to_json() const; // {"label":e,"children":[...]}

private:
    int p_;
    int k_;
    std::vector<int> pre_;
};

// A canonical orbit representative; encodes one irreducible character of the
// iterated wreath product at level k.
class TreeOrbit {
public:
    explicit TreeOrbit(const LabelledTree& tree) : tree_(tree.canonicalized()) {}

    const LabelledTree& canonical() const { return tree_; }
    int p() const { return tree_.p(); }
    int k() const { return tree_.k(); }
    bool is_admissible() const { return tree_.is_admissible(); }
    TreeStats stats() const { return tree_.stats(); }

    bool operator==(const TreeOrbit&) const = default;
    std::strong_ordering operator<=>(const TreeOrbit&) const = default;

    std::string to_string() const { return tree_.to_string(); }

private:
    LabelledTree tree_;
};

// Number of admissible orbits at level k: a(1) = p,
// a(k+1) = p*a(k) + (a(k)^p - a(k))/p. Throws std::overflow_error when the
// count exceeds `guard`.
unsigned long long count_irr(int p, int k, unsigned long long guard = 10'000'000);

// All admissible orbits at level k in increasing preorder-label order.
// Throws when the count exceeds `guard`.
std::vector<TreeOrbit> enumerate_irr(int p, int k, unsigned long long guard = 10'000'000);

// Parse the textual notation: bare label ("3"), "()" for the empty tree,
// "(T1|...|Tp;e)", or the shorthand "X(a;b;...)" for iterated all-equal
// children read bottom-up.
LabelledTree parse_tree(int p, std::string_view text);

} // namespace sbc
