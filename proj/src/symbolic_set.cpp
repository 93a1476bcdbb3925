#include "sbc/symbolic_set.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace sbc {

SymbolicPartitionSet SymbolicPartitionSet::full(long long n) {
    if (n < 0) throw std::invalid_argument("Full(n): n must be nonnegative");
    return {Kind::Full, n, n};
}

SymbolicPartitionSet SymbolicPartitionSet::punctured_full(long long n) {
    if (n < 3) throw std::invalid_argument("PuncturedFull(n) requires n >= 3");
    return {Kind::PuncturedFull, n, n};
}

SymbolicPartitionSet SymbolicPartitionSet::box(long long n, long long t) {
    if (n < 0 || t < 0 || t > n)
        throw std::invalid_argument("Box(n,t) requires 0 <= t <= n");
    if (t == n) return full(n);  // Box(n,n) is the full set
    return {Kind::Box, n, t};
}

SymbolicPartitionSet SymbolicPartitionSet::punctured_box(long long n, long long t) {
    // Parameters outside n/2 < t <= n-2 are rejected rather than clamped.
    // At t = n-2 the removed closure covers every width-t member, so the set
    // coincides with Box(n, n-3); the literal definition is kept.
    if (!(2 * t > n && t <= n - 2))
        throw std::invalid_argument("PuncturedBox(n,t) requires n/2 < t <= n-2");
    return {Kind::PuncturedBox, n, t};
}

SymbolicPartitionSet SymbolicPartitionSet::explicit_set(long long n, std::vector<Partition> members,
                                                        bool require_conjugation_closed) {
    std::sort(members.begin(), members.end(), DescLex{});
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const auto& m : members)
        if (m.n() != n) throw std::invalid_argument("explicit set member of wrong size");
    if (require_conjugation_closed) {
        for (const auto& m : members)
            if (!std::binary_search(members.begin(), members.end(), m.conjugate(), DescLex{}))
                throw std::invalid_argument("explicit set is not closed under conjugation");
    }
    SymbolicPartitionSet s{Kind::Explicit, n, 0};
    s.members_ = std::move(members);
    return s;
}

namespace {

bool in_closure_of(const Partition& lambda, const Partition& a) {
    return lambda == a || lambda == a.conjugate();
}

} // namespace

bool SymbolicPartitionSet::contains(const Partition& lambda) const {
    if (lambda.n() != n_)
        throw std::invalid_argument("membership query with |lambda| != n");
    switch (kind_) {
    case Kind::Full:
        return true;
    case Kind::PuncturedFull:
        return !in_closure_of(lambda, Partition{n_ - 1, 1});
    case Kind::Box:
        return lambda.empty() ? t_ >= 0
                              : lambda.first() <= t_ && static_cast<long long>(lambda.length()) <= t_;
    case Kind::PuncturedBox: {
        if (lambda.first() > t_ || static_cast<long long>(lambda.length()) > t_) return false;
        std::vector<long long> p1{t_, n_ - t_ - 1, 1};
        std::vector<long long> p2{t_, 2};
        p2.insert(p2.end(), static_cast<std::size_t>(n_ - t_ - 2), 1);
        return !in_closure_of(lambda, Partition{p1}) && !in_closure_of(lambda, Partition{p2});
    }
    case Kind::Explicit:
        return std::binary_search(members_.begin(), members_.end(), lambda, DescLex{});
    }
    return false;
}

std::vector<Partition> SymbolicPartitionSet::materialize(long long cap) const {
    if (kind_ == Kind::Explicit) return members_;
    std::vector<Partition> out;
    for (auto& lam : enumerate_partitions(n_, cap))
        if (contains(lam)) out.push_back(std::move(lam));
    return out;
}

std::string SymbolicPartitionSet::to_string() const {
    switch (kind_) {
    case Kind::Full: return "P(" + std::to_string(n_) + ")";
    case Kind::PuncturedFull: return "oP(" + std::to_string(n_) + ")";
    case Kind::Box: return "B(" + std::to_string(n_) + "," + std::to_string(t_) + ")";
    case Kind::PuncturedBox: return "oB(" + std::to_string(n_) + "," + std::to_string(t_) + ")";
    case Kind::Explicit: {
        std::string s = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i) s += ',';
            s += members_[i].to_string();
        }
        return s + "}";
    }
    }
    return {};
}

SymbolicPartitionSet SymbolicPartitionSet::parse(std::string_view text) {
    auto strip = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    text = strip(text);
    if (text.empty()) throw std::invalid_argument("empty set literal");
    if (text.front() == '{') {
        if (text.back() != '}') throw std::invalid_argument("unterminated explicit set literal");
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<Partition> members;
        std::size_t depth = 0, start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || (body[i] == ',' && depth == 0)) {
                auto piece = strip(body.substr(start, i - start));
                if (!piece.empty()) members.push_back(Partition::parse(piece));
                start = i + 1;
            } else if (body[i] == '[') ++depth;
            else if (body[i] == ']') --depth;
        }
        if (members.empty()) throw std::invalid_argument("explicit set literal needs at least one member");
        long long n = members.front().n();
        return explicit_set(n, std::move(members));
    }
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw std::invalid_argument("malformed set literal: " + std::string(text));
    std::string_view name = strip(text.substr(0, open));
    std::string_view args = text.substr(open + 1, text.size() - open - 2);
    std::vector<long long> vals;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= args.size(); ++i) {
        if (i == args.size() || args[i] == ',') {
            auto piece = strip(args.substr(start, i - start));
            if (piece.empty()) throw std::invalid_argument("malformed set arguments");
            vals.push_back(std::stoll(std::string(piece)));
            start = i + 1;
        }
    }
    if (name == "P" && vals.size() == 1) return full(vals[0]);
    if (name == "oP" && vals.size() == 1) return punctured_full(vals[0]);
    if (name == "B" && vals.size() == 2) return box(vals[0], vals[1]);
    if (name == "oB" && vals.size() == 2) return punctured_box(vals[0], vals[1]);
    throw std::invalid_argument("unknown set family: " + std::string(name));
}

nlohmann::json SymbolicPartitionSet::to_json() const {
    using nlohmann::json;
    switch (kind_) {
    case Kind::Full: return json{{"kind", "full"}, {"n", n_}};
    case Kind::PuncturedFull: return json{{"kind", "punctured_full"}, {"n", n_}};
    case Kind::Box: return json{{"kind", "box"}, {"n", n_}, {"t", t_}};
    case Kind::PuncturedBox: return json{{"kind", "punctured_box"}, {"n", n_}, {"t", t_}};
    case Kind::Explicit: {
        json arr = json::array();
        for (const auto& m : members_) arr.push_back(m.parts());
        return json{{"kind", "explicit"}, {"n", n_}, {"set", arr}};
    }
    }
    return {};
}

} // namespace sbc
