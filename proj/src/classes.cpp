#include "sbc/classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sbc {

namespace {

long long ipow(int p, int e) {
    long long n = 1;
    for (int i = 0; i < e; ++i) n *= p;
    return n;
}

std::vector<int> min_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    std::vector<int> cur = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::vector<ComponentClass> component_classes(int p, int level) {
    std::vector<ComponentClass> out;
    if (level == 0) {
        ComponentClass c;
        c.level = 0;
        c.cycle_type = {1};
        out.push_back(std::move(c));
        return out;
    }
    if (level == 1) {
        for (int j = 0; j < p; ++j) {
            ComponentClass c;
            c.level = 1;
            c.base = {j};
            if (j == 0)
                c.cycle_type.assign(static_cast<std::size_t>(p), 1);
            else
                c.cycle_type = {p};
            out.push_back(std::move(c));
        }
        return out;
    }
    if (level != 2) throw std::invalid_argument("oracle classes support levels 0..2 only");

    // Base classes: rotation orbits of exponent tuples.
    std::vector<int> tuple(static_cast<std::size_t>(p), 0);
    for (;;) {
        if (tuple == min_rotation(tuple)) {
            ComponentClass c;
            c.level = 2;
            c.base = tuple;
            bool constant = std::all_of(tuple.begin(), tuple.end(),
                                        [&](int x) { return x == tuple[0]; });
            c.size = constant ? 1 : p;
            for (int x : tuple) {
                if (x == 0)
                    c.cycle_type.insert(c.cycle_type.end(), static_cast<std::size_t>(p), 1);
                else
                    c.cycle_type.push_back(p);
            }
            std::sort(c.cycle_type.rbegin(), c.cycle_type.rend());
            out.push_back(std::move(c));
        }
        int pos = p - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == p - 1)
            tuple[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    // Skew classes: top power j, cycle-product exponent s.
    for (int j = 1; j < p; ++j)
        for (int s = 0; s < p; ++s) {
            ComponentClass c;
            c.level = 2;
            c.skew = true;
            c.j = j;
            c.s = s;
            c.size = ipow(p, p - 1);
            if (s == 0)
                c.cycle_type.assign(static_cast<std::size_t>(p), p);
            else
                c.cycle_type = {static_cast<long long>(p) * p};
            out.push_back(std::move(c));
        }
    return out;
}

bool component_is_identity(const ComponentClass& c) {
    if (c.level == 0) return true;
    if (c.skew) return false;
    return std::all_of(c.base.begin(), c.base.end(), [](int x) { return x == 0; });
}

} // namespace

namespace {

void require_prime(int p) {
    if (p < 2) throw std::invalid_argument("p must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be a prime");
}

} // namespace

long long group_order(int p, long long n) {
    require_prime(p);
    long long order = 1;
    for (int e : p_adic_exponents(p, n)) {
        if (e > 2) throw std::invalid_argument("oracle scale restricted to p-adic exponents <= 2");
        if (e == 1) order *= p;
        if (e == 2) order *= ipow(p, p + 1);
    }
    return order;
}

std::vector<ConjClass> conjugacy_classes(int p, long long n) {
    require_prime(p);
    std::vector<int> exps = p_adic_exponents(p, n);
    for (int e : exps)
        if (e > 2) throw std::invalid_argument("oracle scale restricted to p-adic exponents <= 2");

    std::vector<std::vector<ComponentClass>> per_comp;
    for (int e : exps) per_comp.push_back(component_classes(p, e));

    std::vector<ConjClass> out;
    std::vector<std::size_t> idx(per_comp.size(), 0);
    for (;;) {
        ConjClass g;
        std::vector<long long> type;
        g.is_identity = true;
        for (std::size_t i = 0; i < per_comp.size(); ++i) {
            const auto& c = per_comp[i][idx[i]];
            g.comps.push_back(c);
            g.size *= c.size;
            g.is_identity = g.is_identity && component_is_identity(c);
            type.insert(type.end(), c.cycle_type.begin(), c.cycle_type.end());
        }
        std::sort(type.rbegin(), type.rend());
        g.cycle_type = Partition{std::move(type)};
        out.push_back(std::move(g));

        std::size_t pos = per_comp.size();
        while (pos-- > 0) {
            if (++idx[pos] < per_comp[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

namespace {

CyclotomicInt component_value(int p, const TreeOrbit& orbit, const ComponentClass& g) {
    const auto& pre = orbit.canonical().preorder();
    if (orbit.k() == 0) return CyclotomicInt(p, 1);
    if (orbit.k() == 1) {
        // cyclic group character
        return CyclotomicInt::root_power(p, static_cast<long long>(pre[0]) * g.base[0]);
    }
    int top = pre[0];
    std::vector<int> leaves(pre.begin() + 1, pre.end());
    if (top < p) {
        int delta = leaves[0];
        if (g.skew)
            return CyclotomicInt::root_power(p, static_cast<long long>(top) * g.j +
                                                    static_cast<long long>(delta) * g.s);
        long long sum = std::accumulate(g.base.begin(), g.base.end(), 0LL);
        return CyclotomicInt::root_power(p, static_cast<long long>(delta) * sum);
    }
    // Induced from a mixed base character: supported on the base subgroup,
    // where it sums the p cyclic alignments.
    if (g.skew) return CyclotomicInt(p, 0);
    CyclotomicInt acc(p);
    for (int r = 0; r < p; ++r) {
        long long e = 0;
        for (int i = 0; i < p; ++i)
            e += static_cast<long long>(leaves[static_cast<std::size_t>(i)]) *
                 g.base[static_cast<std::size_t>((i + r) % p)];
        acc += CyclotomicInt::root_power(p, e);
    }
    return acc;
}

} // namespace

CyclotomicInt theta_value(const CharDescriptor& theta, const ConjClass& g) {
    if (theta.components().size() != g.comps.size())
        throw std::invalid_argument("theta_value: component mismatch between character and class");
    CyclotomicInt r(theta.p(), 1);
    for (std::size_t i = 0; i < g.comps.size(); ++i) {
        if (theta.components()[i].k() != g.comps[i].level)
            throw std::invalid_argument("theta_value: component level mismatch");
        r = r * component_value(theta.p(), theta.components()[i], g.comps[i]);
    }
    return r;
}

std::string validate_level2_classes_by_enumeration(int p) {
    const int npts = p * p;
    using Perm = std::vector<std::uint8_t>;
    auto compose = [&](const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
        Perm r(static_cast<std::size_t>(npts));
        for (int x = 0; x < npts; ++x) r[static_cast<std::size_t>(x)] = a[b[static_cast<std::size_t>(x)]];
        return r;
    };
    auto inverse = [&](const Perm& a) {
        Perm r(static_cast<std::size_t>(npts));
        for (int x = 0; x < npts; ++x) r[a[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
        return r;
    };
    auto point = [&](int block, int t) { return block * p + t; };

    // Generators: one p-cycle inside each block, plus the block rotation.
    std::vector<Perm> gens;
    for (int b = 0; b < p; ++b) {
        Perm g(static_cast<std::size_t>(npts));
        std::iota(g.begin(), g.end(), 0);
        for (int t = 0; t < p; ++t)
            g[static_cast<std::size_t>(point(b, t))] = static_cast<std::uint8_t>(point(b, (t + 1) % p));
        gens.push_back(std::move(g));
    }
    {
        Perm h(static_cast<std::size_t>(npts));
        for (int b = 0; b < p; ++b)
            for (int t = 0; t < p; ++t)
                h[static_cast<std::size_t>(point(b, t))] = static_cast<std::uint8_t>(point((b + 1) % p, t));
        gens.push_back(std::move(h));
    }

    // Full group by closure.
    std::map<Perm, int> element_id;
    std::vector<Perm> elements;
    {
        Perm id(static_cast<std::size_t>(npts));
        std::iota(id.begin(), id.end(), 0);
        elements.push_back(id);
        element_id[id] = 0;
        for (std::size_t head = 0; head < elements.size(); ++head) {
            for (const auto& g : gens) {
                Perm next = compose(g, elements[head]);
                if (element_id.emplace(next, static_cast<int>(elements.size())).second)
                    elements.push_back(std::move(next));
            }
        }
    }
    long long expected_order = ipow(p, p + 1);
    if (static_cast<long long>(elements.size()) != expected_order)
        return "group order " + std::to_string(elements.size()) + " != " + std::to_string(expected_order);

    // Conjugacy classes by generator closure.
    std::vector<int> class_of(elements.size(), -1);
    std::vector<long long> class_size;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (class_of[i] >= 0) continue;
        int id = static_cast<int>(class_size.size());
        std::vector<std::size_t> queue{i};
        class_of[i] = id;
        long long size = 0;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            ++size;
            for (const auto& g : gens) {
                Perm conj = compose(compose(g, elements[cur]), inverse(g));
                std::size_t target = static_cast<std::size_t>(element_id.at(conj));
                if (class_of[target] < 0) {
                    class_of[target] = id;
                    queue.push_back(target);
                }
            }
        }
        class_size.push_back(size);
    }

    auto analytic = component_classes(p, 2);
    if (analytic.size() != class_size.size())
        return "class count " + std::to_string(class_size.size()) + " != analytic " +
               std::to_string(analytic.size());

    auto perm_cycle_type = [&](const Perm& g) {
        std::vector<long long> type;
        std::vector<bool> seen(g.size(), false);
        for (std::size_t x = 0; x < g.size(); ++x) {
            if (seen[x]) continue;
            long long len = 0;
            std::size_t cur = x;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = g[cur];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    };

    // Build a representative permutation for each analytic class: base part
    // rotating block b by x_b, optionally preceded by j block rotations with
    // the whole cycle product placed in one block.
    std::vector<bool> hit(class_size.size(), false);
    for (const auto& c : analytic) {
        Perm rep(static_cast<std::size_t>(npts));
        std::vector<int> x = c.skew ? std::vector<int>(static_cast<std::size_t>(p), 0) : c.base;
        if (c.skew) x[0] = c.s;
        int shift = c.skew ? c.j : 0;
        for (int b = 0; b < p; ++b)
            for (int t = 0; t < p; ++t) {
                int nb = (b + shift) % p;
                rep[static_cast<std::size_t>(point(b, t))] =
                    static_cast<std::uint8_t>(point(nb, (t + x[static_cast<std::size_t>(nb)]) % p));
            }
        auto it = element_id.find(rep);
        if (it == element_id.end()) return "analytic representative not a group element";
        int id = class_of[static_cast<std::size_t>(it->second)];
        if (hit[static_cast<std::size_t>(id)]) return "two analytic classes map to one brute class";
        hit[static_cast<std::size_t>(id)] = true;
        if (class_size[static_cast<std::size_t>(id)] != c.size)
            return "class size mismatch: brute " + std::to_string(class_size[static_cast<std::size_t>(id)]) +
                   " vs analytic " + std::to_string(c.size);
        auto type = perm_cycle_type(rep);
        if (type != c.cycle_type) return "cycle type mismatch on analytic representative";
    }
    return {};
}

} // namespace sbc
