#include "sbc/tree.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace sbc {

namespace {

std::size_t tree_size(int p, int k) {
    // (p^k - 1) / (p - 1)
    std::size_t s = 0, power = 1;
    for (int i = 0; i < k; ++i) {
        s += power;
        power *= static_cast<std::size_t>(p);
    }
    return s;
}

} // namespace

LabelledTree::LabelledTree(int p, int k, std::vector<int> preorder_labels)
    : p_(p), k_(k), pre_(std::move(preorder_labels)) {
    if (p_ < 2) throw std::invalid_argument("tree arity must be at least 2");
    if (k_ < 0) throw std::invalid_argument("tree level must be nonnegative");
    if (pre_.size() != tree_size(p_, k_))
        throw std::invalid_argument("preorder label count does not match a complete tree");
    for (int l : pre_)
        if (l < 0 || l > p_) throw std::invalid_argument("tree label out of range [0, p]");
}

LabelledTree LabelledTree::leaf(int p, int label) { return {p, 1, {label}}; }

LabelledTree LabelledTree::empty(int p) { return {p, 0, {}}; }

LabelledTree LabelledTree::node(int label, std::span<const LabelledTree> children) {
    if (children.empty()) throw std::invalid_argument("node requires children; use leaf");
    int p = children.front().p();
    if (static_cast<int>(children.size()) != p)
        throw std::invalid_argument("node requires exactly p children");
    std::vector<int> pre{label};
    for (const auto& c : children) {
        if (c.p() != p || c.k() != children.front().k())
            throw std::invalid_argument("node children must share arity and level");
        pre.insert(pre.end(), c.preorder().begin(), c.preorder().end());
    }
    return {p, children.front().k() + 1, std::move(pre)};
}

LabelledTree LabelledTree::linear(int p, std::span<const int> labels) {
    if (labels.empty()) return empty(p);
    LabelledTree t = leaf(p, labels.front());
    for (std::size_t i = 1; i < labels.size(); ++i) {
        std::vector<LabelledTree> ch(static_cast<std::size_t>(p), t);
        t = node(labels[i], ch);
    }
    return t;
}

int LabelledTree::root_label() const {
    if (is_empty()) throw std::logic_error("root_label of the empty tree");
    return pre_[0];
}

std::vector<LabelledTree> LabelledTree::children() const {
    std::vector<LabelledTree> out;
    if (k_ <= 1) return out;
    std::size_t s = (pre_.size() - 1) / static_cast<std::size_t>(p_);
    for (int i = 0; i < p_; ++i) {
        std::vector<int> sub(pre_.begin() + 1 + static_cast<long>(i * s),
                             pre_.begin() + 1 + static_cast<long>((i + 1) * s));
        out.emplace_back(p_, k_ - 1, std::move(sub));
    }
    return out;
}

LabelledTree LabelledTree::rotated(int r) const {
    if (k_ <= 1) return *this;
    std::size_t s = (pre_.size() - 1) / static_cast<std::size_t>(p_);
    std::vector<int> pre{pre_[0]};
    for (int i = 0; i < p_; ++i) {
        int src = (r + i) % p_;
        pre.insert(pre.end(), pre_.begin() + 1 + static_cast<long>(src * s),
                   pre_.begin() + 1 + static_cast<long>((src + 1) * s));
    }
    return {p_, k_, std::move(pre)};
}

namespace {

// In-place canonicalization of the slice t (length tree_size(p,k)).
void canon_rec(std::span<int> t, int p, int k) {
    if (k <= 1) return;
    std::size_t s = (t.size() - 1) / static_cast<std::size_t>(p);
    for (int i = 0; i < p; ++i)
        canon_rec(t.subspan(1 + static_cast<std::size_t>(i) * s, s), p, k - 1);
    // Pick the lexicographically least cyclic rotation of the child blocks.
    auto block = [&](int i) { return t.subspan(1 + static_cast<std::size_t>(i) * s, s); };
    int best = 0;
    for (int r = 1; r < p; ++r) {
        for (int i = 0; i < p; ++i) {
            auto lhs = block((r + i) % p), rhs = block((best + i) % p);
            auto cmp = std::lexicographical_compare_three_way(lhs.begin(), lhs.end(),
                                                              rhs.begin(), rhs.end());
            if (cmp == std::strong_ordering::less) { best = r; break; }
            if (cmp == std::strong_ordering::greater) break;
        }
    }
    if (best != 0) {
        std::vector<int> rot(t.size() - 1);
        for (int i = 0; i < p; ++i) {
            auto b = block((best + i) % p);
            std::copy(b.begin(), b.end(), rot.begin() + static_cast<long>(i) * static_cast<long>(s));
        }
        std::copy(rot.begin(), rot.end(), t.begin() + 1);
    }
}

} // namespace

LabelledTree LabelledTree::canonicalized() const {
    std::vector<int> pre = pre_;
    canon_rec(pre, p_, k_);
    return {p_, k_, std::move(pre)};
}

std::strong_ordering LabelledTree::operator<=>(const LabelledTree& o) const {
    if (auto c = p_ <=> o.p_; c != 0) return c;
    if (auto c = k_ <=> o.k_; c != 0) return c;
    return pre_ <=> o.pre_;
}

namespace {

bool admissible_rec(std::span<const int> t, int p, int k) {
    if (k == 0) return true;
    if (k == 1) return t[0] >= 0 && t[0] < p;
    std::size_t s = (t.size() - 1) / static_cast<std::size_t>(p);
    std::vector<std::vector<int>> canon(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        auto block = t.subspan(1 + static_cast<std::size_t>(i) * s, s);
        if (!admissible_rec(block, p, k - 1)) return false;
        canon[static_cast<std::size_t>(i)].assign(block.begin(), block.end());
        canon_rec(canon[static_cast<std::size_t>(i)], p, k - 1);
    }
    bool all_equal = std::all_of(canon.begin() + 1, canon.end(),
                                 [&](const auto& c) { return c == canon[0]; });
    if (t[0] == p) return !all_equal;
    return all_equal;
}

// Longest human chain from the root downwards, counting the root if it is a
// person; classifies each person by the chain length strictly below it.
long long chain_rec(std::span<const int> t, int p, int k, TreeStats& st) {
    if (k == 0) return 0;
    int label = t[0];
    ++st.label_counts[static_cast<std::size_t>(label)];
    long long below = 0;
    if (k > 1) {
        std::size_t s = (t.size() - 1) / static_cast<std::size_t>(p);
        for (int i = 0; i < p; ++i)
            below = std::max(below, chain_rec(t.subspan(1 + static_cast<std::size_t>(i) * s, s),
                                              p, k - 1, st));
    }
    bool person = label >= 1 && label <= p - 1;
    if (person) {
        ++st.eta;
        if (static_cast<std::size_t>(below) >= st.gamma.size())
            st.gamma.resize(static_cast<std::size_t>(below) + 1, 0);
        ++st.gamma[static_cast<std::size_t>(below)];
    }
    if (label == p) ++st.degree_exponent;
    return (person ? 1 : 0) + below;
}

} // namespace

bool LabelledTree::is_admissible() const { return admissible_rec(pre_, p_, k_); }

TreeStats LabelledTree::stats() const {
    TreeStats st;
    st.label_counts.assign(static_cast<std::size_t>(p_) + 1, 0);
    chain_rec(pre_, p_, k_, st);
    st.value = static_cast<long long>(st.gamma.size());
    // gamma has no internal zeros: a person with an i-generation chain below
    // it exhibits people at every smaller depth along that chain.
    return st;
}

LabelledTree LabelledTree::people_collapsed() const {
    std::vector<int> pre = pre_;
    for (int& l : pre)
        if (l >= 1 && l <= p_ - 1) l = 1;
    LabelledTree t{p_, k_, std::move(pre)};
    return t.canonicalized();
}

std::string LabelledTree::to_string() const {
    if (is_empty()) return "()";
    if (k_ == 1) return std::to_string(pre_[0]);
    std::string s = "(";
    auto ch = children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) s += '|';
        s += ch[i].to_string();
    }
    s += ';';
    s += std::to_string(pre_[0]);
    s += ')';
    return s;
}

nlohmann::json LabelledTree::to_json() const {
    using nlohmann::json;
    if (is_empty()) return json(nullptr);
    json j{{"label", pre_[0]}};
    if (k_ > 1) {
        json arr = json::array();
        for (const auto& c : children()) arr.push_back(c.to_json());
        j["children"] = arr;
    } else {
        j["children"] = json::array();
    }
    return j;
}

unsigned long long count_irr(int p, int k, unsigned long long guard) {
    if (p < 2 || k < 0) throw std::invalid_argument("count_irr: need p >= 2, k >= 0");
    // The orbit count (a^p - a)/p + p*a relies on the rotation orbits of
    // non-constant tuples having full length, i.e. on p being prime.
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("count_irr: p must be prime");
    if (k == 0) return 1;
    unsigned long long a = static_cast<unsigned long long>(p);
    auto too_big = [&](unsigned long long v) { return v > guard; };
    for (int level = 1; level < k; ++level) {
        if (too_big(a)) throw std::overflow_error("count_irr: orbit count exceeds guard");
        // a^p may overflow u64 well before the guard triggers; use 128 bits.
        unsigned __int128 pw = 1;
        for (int i = 0; i < p; ++i) {
            pw *= a;
            if (pw > static_cast<unsigned __int128>(guard) * p + p * a + 1) {
                throw std::overflow_error("count_irr: orbit count exceeds guard");
            }
        }
        unsigned __int128 next = (pw - a) / static_cast<unsigned>(p) +
                                 static_cast<unsigned __int128>(p) * a;
        if (next > guard) throw std::overflow_error("count_irr: orbit count exceeds guard");
        a = static_cast<unsigned long long>(next);
    }
    return a;
}

std::vector<TreeOrbit> enumerate_irr(int p, int k, unsigned long long guard) {
    if (k < 1) throw std::invalid_argument("enumerate_irr: k must be at least 1");
    count_irr(p, k, guard);  // throws when out of range
    // Level lists of canonical preorder encodings, built bottom-up.
    std::vector<std::vector<int>> level;
    for (int l = 0; l < p; ++l) level.push_back({l});
    for (int cur = 2; cur <= k; ++cur) {
        std::vector<std::vector<int>> next;
        // Root label in [0, p-1]: p identical child subtrees.
        for (int e = 0; e < p; ++e) {
            for (const auto& sub : level) {
                std::vector<int> enc{e};
                for (int i = 0; i < p; ++i) enc.insert(enc.end(), sub.begin(), sub.end());
                next.push_back(std::move(enc));
            }
        }
        // Root label p: mixed child tuples up to cyclic rotation. The level
        // list is sorted, so comparing index tuples matches comparing the
        // concatenated encodings.
        std::sort(level.begin(), level.end());
        std::size_t a = level.size();
        std::vector<std::size_t> idx(static_cast<std::size_t>(p), 0);
        for (;;) {
            bool constant = std::all_of(idx.begin() + 1, idx.end(),
                                        [&](std::size_t i) { return i == idx[0]; });
            if (!constant) {
                bool minimal = true;
                for (int r = 1; r < p && minimal; ++r)
                    for (int i = 0; i < p; ++i) {
                        std::size_t a1 = idx[static_cast<std::size_t>((r + i) % p)];
                        std::size_t a2 = idx[static_cast<std::size_t>(i)];
                        if (a1 < a2) { minimal = false; break; }
                        if (a1 > a2) break;
                    }
                if (minimal) {
                    std::vector<int> enc{p};
                    for (int i = 0; i < p; ++i) {
                        const auto& sub = level[idx[static_cast<std::size_t>(i)]];
                        enc.insert(enc.end(), sub.begin(), sub.end());
                    }
                    next.push_back(std::move(enc));
                }
            }
            int pos = p - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == a) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    std::vector<TreeOrbit> out;
    out.reserve(level.size());
    for (auto& enc : level) out.emplace_back(LabelledTree{p, k, std::move(enc)});
    return out;
}

namespace {

struct TreeParser {
    int p;
    std::string_view text;
    std::size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < text.size() && text[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument(std::string("tree notation: expected '") + c + "'");
    }
    int read_label() {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("tree notation: expected label");
        return std::stoi(std::string(text.substr(start, i - start)));
    }

    LabelledTree parse() {
        skip_ws();
        if (i < text.size() && (text[i] == 'X' || text[i] == 'x')) {
            ++i;
            expect('(');
            std::vector<int> labels{read_label()};
            while (eat(';')) labels.push_back(read_label());
            expect(')');
            return LabelledTree::linear(p, labels);
        }
        if (i < text.size() && text[i] == '(') {
            ++i;
            skip_ws();
            if (eat(')')) return LabelledTree::empty(p);
            std::vector<LabelledTree> children{parse()};
            while (eat('|')) children.push_back(parse());
            expect(';');
            int e = read_label();
            expect(')');
            if (static_cast<int>(children.size()) != p)
                throw std::invalid_argument("tree notation: expected exactly p subtrees");
            return LabelledTree::node(e, children);
        }
        return LabelledTree::leaf(p, read_label());
    }
};

} // namespace

LabelledTree parse_tree(int p, std::string_view text) {
    TreeParser parser{p, text};
    LabelledTree t = parser.parse();
    parser.skip_ws();
    if (parser.i != text.size())
        throw std::invalid_argument("tree notation: trailing characters");
    return t;
}

} // namespace sbc
