#include "sbc/descriptor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sbc {

namespace {

long long component_size(int p, int k) {
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    return n;
}

TreeStats aggregate(int p, const std::vector<TreeOrbit>& comps, long long& value_out) {
    TreeStats total;
    total.label_counts.assign(static_cast<std::size_t>(p) + 1, 0);
    value_out = 0;
    for (const auto& c : comps) {
        TreeStats st = c.stats();
        total.eta += st.eta;
        if (st.gamma.size() > total.gamma.size()) total.gamma.resize(st.gamma.size(), 0);
        for (std::size_t i = 0; i < st.gamma.size(); ++i) total.gamma[i] += st.gamma[i];
        total.degree_exponent += st.degree_exponent;
        for (std::size_t i = 0; i < st.label_counts.size(); ++i)
            total.label_counts[i] += st.label_counts[i];
        value_out = std::max(value_out, st.value);
    }
    total.value = value_out;
    return total;
}

} // namespace

CharDescriptor::CharDescriptor(int p, std::vector<TreeOrbit> components) : p_(p) {
    if (p_ < 2) throw std::invalid_argument("descriptor: p must be at least 2");
    if (components.empty()) throw std::invalid_argument("descriptor: needs at least one component");
    std::sort(components.begin(), components.end(),
              [](const TreeOrbit& a, const TreeOrbit& b) {
                  return a.k() != b.k() ? a.k() < b.k() : a < b;
              });
    std::map<int, int> per_exponent;
    for (const auto& c : components) {
        if (c.p() != p_) throw std::invalid_argument("descriptor: component arity mismatch");
        if (!c.is_admissible())
            throw std::invalid_argument("descriptor: inadmissible component " + c.to_string());
        n_ += component_size(p_, c.k());
        if (++per_exponent[c.k()] > p_ - 1)
            throw std::invalid_argument("descriptor: exponent repeated more than p-1 times");
    }
    components_ = std::move(components);
    stats_ = aggregate(p_, components_, value_);
}

CharDescriptor CharDescriptor::trivial(int p, long long n) {
    std::vector<TreeOrbit> comps;
    for (int e : p_adic_exponents(p, n)) {
        std::vector<int> zeros(e, 0);
        comps.emplace_back(LabelledTree::linear(p, zeros));
    }
    return CharDescriptor(p, std::move(comps));
}

std::vector<int> CharDescriptor::exponents() const {
    std::vector<int> out;
    for (const auto& c : components_) out.push_back(c.k());
    return out;
}

std::string CharDescriptor::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += " * ";
        s += components_[i].to_string();
    }
    return s;
}

std::vector<TreeOrbit> CharDescriptor::collapsed_components() const {
    std::vector<TreeOrbit> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.emplace_back(c.canonical().people_collapsed());
    std::sort(out.begin(), out.end(), [](const TreeOrbit& a, const TreeOrbit& b) {
        return a.k() != b.k() ? a.k() < b.k() : a < b;
    });
    return out;
}

bool CharDescriptor::equivalent_0p(const CharDescriptor& other) const {
    if (p_ != other.p_ || n_ != other.n_) return false;
    if (exponents() != other.exponents()) return false;
    return collapsed_components() == other.collapsed_components();
}

std::vector<int> p_adic_exponents(int p, long long n) {
    if (n <= 0) throw std::invalid_argument("p-adic expansion: n must be positive");
    std::vector<int> out;
    int e = 0;
    while (n > 0) {
        long long digit = n % p;
        out.insert(out.end(), static_cast<std::size_t>(digit), e);
        n /= p;
        ++e;
    }
    return out;
}

CharDescriptor p_adic_descriptor(int p, long long n, std::vector<TreeOrbit> orbits) {
    std::vector<int> want = p_adic_exponents(p, n);
    std::vector<int> got;
    for (const auto& o : orbits) got.push_back(o.k());
    std::sort(got.begin(), got.end());
    if (got != want)
        throw std::invalid_argument("descriptor orbits do not match the p-adic expansion of n");
    return CharDescriptor(p, std::move(orbits));
}

std::vector<CharDescriptor> enumerate_irr_n(int p, long long n, unsigned long long guard) {
    std::vector<int> exps = p_adic_exponents(p, n);
    // Group equal exponents; characters are multisets per group.
    std::map<int, int> mult;
    for (int e : exps) ++mult[e];

    unsigned long long total = 1;
    std::map<int, std::vector<TreeOrbit>> level_orbits;
    for (auto [e, m] : mult) {
        unsigned long long a = e == 0 ? 1 : count_irr(p, e, guard);
        // multisets of size m from a options: C(a+m-1, m)
        unsigned long long ways = 1;
        for (int i = 0; i < m; ++i) {
            unsigned __int128 w = static_cast<unsigned __int128>(ways) * (a + static_cast<unsigned long long>(i));
            w /= static_cast<unsigned long long>(i + 1);
            if (w > guard) throw std::overflow_error("enumerate_irr_n: count exceeds guard");
            ways = static_cast<unsigned long long>(w);
        }
        unsigned __int128 t = static_cast<unsigned __int128>(total) * ways;
        if (t > guard) throw std::overflow_error("enumerate_irr_n: count exceeds guard");
        total = static_cast<unsigned long long>(t);
        if (e == 0)
            level_orbits[e] = {TreeOrbit(LabelledTree::empty(p))};
        else
            level_orbits[e] = enumerate_irr(p, e, guard);
    }

    std::vector<CharDescriptor> out;
    std::vector<TreeOrbit> current;
    auto rec = [&](auto&& self, std::map<int, int>::const_iterator it) -> void {
        if (it == mult.end()) {
            out.emplace_back(p, current);
            return;
        }
        const auto& orbits = level_orbits[it->first];
        int m = it->second;
        std::vector<std::size_t> pick;
        auto choose = [&](auto&& cself, std::size_t from, int left) -> void {
            if (left == 0) {
                self(self, std::next(it));
                return;
            }
            for (std::size_t i = from; i < orbits.size(); ++i) {
                current.push_back(orbits[i]);
                cself(cself, i, left - 1);
                current.pop_back();
            }
        };
        choose(choose, 0, m);
    };
    rec(rec, mult.begin());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::string_view> split_components(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == '*' && depth == 0)) {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        } else if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
    }
    return out;
}

} // namespace

CharDescriptor CharDescriptor::parse(int p, std::string_view text) {
    std::vector<TreeOrbit> comps;
    for (auto piece : split_components(text))
        comps.emplace_back(parse_tree(p, piece));
    return CharDescriptor(p, std::move(comps));
}

} // namespace sbc
