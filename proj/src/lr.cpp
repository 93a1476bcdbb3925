#include "sbc/lr.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

namespace sbc {

namespace {

// Cells of lambda/mu in reverse reading word order (rows top to bottom, each
// row right to left), with the indices of the already-processed neighbours
// that constrain the value: the cell to the right (same row) and the cell
// directly above (previous row), or -1 when absent / inside mu.
struct SkewCells {
    struct Cell {
        int right = -1;
        int above = -1;
    };
    std::vector<Cell> cells;

    SkewCells(const Partition& lambda, const Partition& mu) {
        std::vector<std::vector<int>> index(lambda.length());
        for (std::size_t r = 1; r <= lambda.length(); ++r) {
            long long lo = mu.part(r), hi = lambda.part(r);
            index[r - 1].assign(static_cast<std::size_t>(hi), -1);
            for (long long c = hi; c > lo; --c) {
                Cell cell;
                if (c < hi) cell.right = index[r - 1][static_cast<std::size_t>(c)];
                if (r >= 2 && c <= lambda.part(r - 1) && c > mu.part(r - 1))
                    cell.above = index[r - 2][static_cast<std::size_t>(c - 1)];
                index[r - 1][static_cast<std::size_t>(c - 1)] = static_cast<int>(cells.size());
                cells.push_back(cell);
            }
        }
    }
};

long long count_lattice_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!lambda.contains(mu)) return 0;
    SkewCells shape(lambda, mu);
    std::size_t ncells = shape.cells.size();
    if (ncells == 0) return nu.empty() ? 1 : 0;
    int maxval = static_cast<int>(nu.length());
    if (maxval == 0) return 0;
    std::vector<long long> counts(static_cast<std::size_t>(maxval) + 1, 0);
    std::vector<int> value(ncells, 0);
    long long total = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ncells) { ++total; return; }
        const auto& cell = shape.cells[i];
        int hi = cell.right >= 0 ? value[static_cast<std::size_t>(cell.right)] : maxval;
        int lo = cell.above >= 0 ? value[static_cast<std::size_t>(cell.above)] + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts[static_cast<std::size_t>(v)] >= nu.part(static_cast<std::size_t>(v))) continue;
            if (v > 1 && counts[static_cast<std::size_t>(v) - 1] <= counts[static_cast<std::size_t>(v)]) continue;
            ++counts[static_cast<std::size_t>(v)];
            value[i] = v;
            self(self, i + 1);
            --counts[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0);
    return total;
}

struct VecHash {
    std::size_t operator()(const std::vector<long long>& v) const {
        std::size_t h = v.size();
        for (long long x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::vector<long long> cache_key(const Partition& a, const Partition& b, const Partition& c) {
    std::vector<long long> key;
    key.reserve(a.length() + b.length() + c.length() + 2);
    key.insert(key.end(), a.parts().begin(), a.parts().end());
    key.push_back(-1);
    key.insert(key.end(), b.parts().begin(), b.parts().end());
    key.push_back(-1);
    key.insert(key.end(), c.parts().begin(), c.parts().end());
    return key;
}

std::mutex g_cache_mutex;
std::unordered_map<std::vector<long long>, long long, VecHash> g_cache;

std::size_t cache_limit() {
    static std::size_t limit = [] {
        if (const char* env = std::getenv("SBC_LR_CACHE"))
            if (long long v = std::atoll(env); v > 0) return static_cast<std::size_t>(v);
        return std::size_t{1} << 20;
    }();
    return limit;
}

} // namespace

long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.n() + nu.n() != lambda.n())
        throw std::invalid_argument("lr_coeff: |mu| + |nu| must equal |lambda|");
    auto key = cache_key(lambda, mu, nu);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
    }
    long long result = count_lattice_fillings(lambda, mu, nu);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (g_cache.size() >= cache_limit()) g_cache.clear();
        g_cache.emplace(std::move(key), result);
    }
    return result;
}

std::size_t lr_cache_size() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.size();
}

void lr_cache_clear() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

std::map<Partition, long long, DescLex> skew_expand(const Partition& lambda, const Partition& mu) {
    std::map<Partition, long long, DescLex> out;
    if (!lambda.contains(mu)) return out;
    SkewCells shape(lambda, mu);
    std::size_t ncells = shape.cells.size();
    if (ncells == 0) {
        out[Partition{}] = 1;
        return out;
    }
    std::vector<long long> counts(ncells + 2, 0);
    std::vector<int> value(ncells, 0);
    int maxused = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ncells) {
            std::vector<long long> content(counts.begin() + 1, counts.begin() + 1 + maxused);
            out[Partition{std::move(content)}] += 1;
            return;
        }
        const auto& cell = shape.cells[i];
        int hi = cell.right >= 0 ? value[static_cast<std::size_t>(cell.right)]
                                 : std::min<int>(maxused + 1, static_cast<int>(ncells));
        int lo = cell.above >= 0 ? value[static_cast<std::size_t>(cell.above)] + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && counts[static_cast<std::size_t>(v) - 1] <= counts[static_cast<std::size_t>(v)]) continue;
            ++counts[static_cast<std::size_t>(v)];
            value[i] = v;
            int prev = maxused;
            maxused = std::max(maxused, v);
            self(self, i + 1);
            maxused = prev;
            --counts[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0);
    return out;
}

std::map<Partition, long long, DescLex> mult_expand(const Partition& mu, const Partition& nu) {
    std::map<Partition, long long, DescLex> out;
    std::size_t values = nu.length();
    std::size_t maxrows = mu.length() + values;
    // shape[r] = current row lengths; prev[r] = prefix counts of the previous
    // value over rows 1..r, drives the ballot inequality.
    std::vector<long long> shape(maxrows + 1, 0);
    for (std::size_t r = 1; r <= mu.length(); ++r) shape[r] = mu.part(r);
    std::vector<long long> prev(maxrows + 2, 0);

    auto place_value = [&](auto&& self, std::size_t v) -> void {
        if (v > values) {
            std::vector<long long> parts;
            for (std::size_t r = 1; r <= maxrows && shape[r] > 0; ++r) parts.push_back(shape[r]);
            out[Partition{std::move(parts)}] += 1;
            return;
        }
        long long need = nu.part(v);
        std::vector<long long> old(shape.begin(), shape.end());
        std::vector<long long> cur(maxrows + 2, 0);
        // Distribute `need` cells over rows top-down: row r gains add cells,
        // subject to the horizontal strip condition (new row r stays <= old
        // row r-1) and the ballot prefix bound cur[r] <= prev[r-1].
        auto rows = [&](auto&& rself, std::size_t r, long long remaining) -> void {
            if (remaining == 0) {
                for (std::size_t rr = r; rr <= maxrows + 1; ++rr) cur[rr] = cur[r - 1];
                std::vector<long long> saved_prev = prev;
                prev = cur;
                self(self, v + 1);
                prev = saved_prev;
                return;
            }
            if (r > maxrows) return;
            long long cap = remaining;
            if (r >= 2) cap = std::min(cap, old[r - 1] - shape[r]);   // strip condition
            if (r >= 2 && shape[r] == 0 && old[r - 1] == 0) cap = 0;  // cannot start past the diagram
            if (v >= 2) cap = std::min(cap, prev[r - 1] - cur[r - 1]);  // ballot
            if (r == 1 && v >= 2) cap = 0;
            if (cap < 0) cap = 0;
            for (long long add = 0; add <= cap; ++add) {
                shape[r] += add;
                cur[r] = cur[r - 1] + add;
                // rows must stay weakly decreasing: with interlacing this
                // holds automatically, but adding 0 to a row shorter than the
                // next row's gain cannot occur (cap <= old[r-1] - shape[r]).
                rself(rself, r + 1, remaining - add);
                shape[r] -= add;
            }
            cur[r] = cur[r - 1];
        };
        rows(rows, 1, need);
    };
    place_value(place_value, 1);
    return out;
}

long long lr_multi(const Partition& lambda, std::span<const Partition> factors) {
    long long total = 0;
    for (const auto& f : factors) total += f.n();
    if (total != lambda.n())
        throw std::invalid_argument("lr_multi: factor sizes must sum to |lambda|");
    if (factors.empty()) return lambda.empty() ? 1 : 0;
    std::map<Partition, long long, DescLex> state;
    state[lambda] = 1;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        std::map<Partition, long long, DescLex> next;
        for (const auto& [xi, c] : state)
            for (const auto& [rest, c2] : skew_expand(xi, factors[i]))
                next[rest] += c * c2;
        state = std::move(next);
        if (state.empty()) return 0;
    }
    auto it = state.find(factors.back());
    return it == state.end() ? 0 : it->second;
}

std::vector<std::pair<std::vector<Partition>, long long>>
restrict_to_young(const Partition& lambda, std::span<const long long> blocks) {
    long long total = 0;
    for (long long b : blocks) {
        if (b <= 0) throw std::invalid_argument("restrict_to_young: blocks must be positive");
        total += b;
    }
    if (total != lambda.n())
        throw std::invalid_argument("restrict_to_young: blocks must sum to |lambda|");

    std::map<std::vector<Partition>, long long> acc;
    auto rec = [&](auto&& self, const Partition& cur, std::size_t k,
                   std::vector<Partition>& suffix, long long mult) -> void {
        if (k == 1) {
            std::vector<Partition> tuple;
            tuple.push_back(cur);
            tuple.insert(tuple.end(), suffix.rbegin(), suffix.rend());
            acc[std::move(tuple)] += mult;
            return;
        }
        for (auto& mu_last : enumerate_partitions(blocks[k - 1])) {
            if (!cur.contains(mu_last)) continue;
            auto exp = skew_expand(cur, mu_last);
            suffix.push_back(mu_last);
            for (const auto& [xi, c] : exp) self(self, xi, k - 1, suffix, mult * c);
            suffix.pop_back();
        }
    };
    std::vector<Partition> suffix;
    rec(rec, lambda, blocks.size(), suffix, 1);

    std::vector<std::pair<std::vector<Partition>, long long>> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.first.begin(), a.first.end(),
                                            b.first.begin(), b.first.end(), DescLex{});
    });
    return out;
}

namespace {

long long uniform_size(std::span<const Partition> set, const char* what) {
    if (set.empty()) throw std::invalid_argument(std::string(what) + ": empty operand");
    long long n = set.front().n();
    for (const auto& p : set)
        if (p.n() != n) throw std::invalid_argument(std::string(what) + ": mixed sizes inside operand");
    return n;
}

} // namespace

std::vector<Partition> star_explicit(std::span<const Partition> a, std::span<const Partition> b) {
    uniform_size(a, "star_explicit");
    uniform_size(b, "star_explicit");
    std::set<Partition, DescLex> acc;
    for (const auto& mu : a)
        for (const auto& nu : b)
            for (const auto& [lam, c] : mult_expand(mu, nu)) acc.insert(lam);
    return {acc.begin(), acc.end()};
}

SymbolicPartitionSet star_symbolic(const SymbolicPartitionSet& s1, const SymbolicPartitionSet& s2) {
    using Kind = SymbolicPartitionSet::Kind;
    if (s1.kind() == Kind::Explicit || s2.kind() == Kind::Explicit)
        throw StarHypothesisError("star_symbolic: explicit operand; use star_explicit");
    // The empty-partition singleton is the identity.
    if (s1.kind() == Kind::Full && s1.n() == 0) return s2;
    if (s2.kind() == Kind::Full && s2.n() == 0) return s1;

    const SymbolicPartitionSet* lo = &s1;
    const SymbolicPartitionSet* hi = &s2;
    auto rank = [](Kind k) {
        switch (k) {
        case Kind::Box: return 0;
        case Kind::Full: return 1;
        case Kind::PuncturedFull: return 2;
        case Kind::PuncturedBox: return 3;
        default: return 4;
        }
    };
    if (rank(lo->kind()) > rank(hi->kind())) std::swap(lo, hi);
    long long x = lo->n(), a = lo->t(), y = hi->n(), b = hi->t();
    auto fail = [&](const char* cond) -> SymbolicPartitionSet {
        throw StarHypothesisError(std::string("star_symbolic: hypotheses unmet (") + cond +
                                  ") for " + lo->to_string() + " * " + hi->to_string() +
                                  "; fall back to star_explicit");
    };

    Kind k1 = lo->kind(), k2 = hi->kind();
    if (k1 == Kind::Box && k2 == Kind::Box) {
        if (!(2 * a > x && 2 * b > y)) return fail("n/2 < t on both boxes");
        return SymbolicPartitionSet::box(x + y, a + b);
    }
    if (k1 == Kind::Box && k2 == Kind::Full) {
        if (!(2 * a > x)) return fail("n/2 < t");
        return SymbolicPartitionSet::box(x + y, a + y);
    }
    if (k1 == Kind::Box && k2 == Kind::PuncturedFull) {
        if (!(2 * a > x)) return fail("n/2 < t");
        if (!(y >= 5)) return fail("punctured-full size >= 5");
        return SymbolicPartitionSet::box(x + y, a + y);
    }
    if (k1 == Kind::Box && k2 == Kind::PuncturedBox) {
        if (!(2 * a > x && a <= x - 1)) return fail("n/2 < t <= n-1 on the box");
        if (!(2 * b > y + 2 && b <= y - 5)) return fail("y/2+1 < t <= y-5 on the punctured box");
        return SymbolicPartitionSet::box(x + y, a + b);
    }
    if (k1 == Kind::Full && k2 == Kind::Full)
        return SymbolicPartitionSet::full(x + y);
    if (k1 == Kind::Full && k2 == Kind::PuncturedFull) {
        if (!(y >= 5)) return fail("punctured-full size >= 5");
        return SymbolicPartitionSet::full(x + y);
    }
    if (k1 == Kind::Full && k2 == Kind::PuncturedBox) {
        if (!(2 * b > y + 2 && b <= y - 5)) return fail("y/2+1 < t <= y-5 on the punctured box");
        return SymbolicPartitionSet::punctured_box(x + y, x + b);
    }
    if (k1 == Kind::PuncturedFull && k2 == Kind::PuncturedFull) {
        if (!(x >= 5 && y >= 5)) return fail("sizes >= 5");
        return SymbolicPartitionSet::full(x + y);
    }
    if (k1 == Kind::PuncturedFull && k2 == Kind::PuncturedBox) {
        if (!(x >= 5)) return fail("punctured-full size >= 5");
        if (!(2 * b > y + 2 && b <= y - 5)) return fail("y/2+1 < t <= y-5 on the punctured box");
        return SymbolicPartitionSet::punctured_box(x + y, x + b);
    }
    if (k1 == Kind::PuncturedBox && k2 == Kind::PuncturedBox) {
        if (!(2 * a > x + 2 && a <= x - 5 && 2 * b > y + 2 && b <= y - 5))
            return fail("n/2+1 < t <= n-5 on both punctured boxes");
        return SymbolicPartitionSet::box(x + y, a + b);
    }
    return fail("unsupported pair");
}

std::vector<Partition> mixed_set(long long q, std::span<const Partition> a) {
    if (q < 2) throw std::invalid_argument("mixed_set: q must be at least 2");
    uniform_size(a, "mixed_set");
    std::vector<Partition> sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end(), DescLex{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::set<Partition, DescLex> acc;
    std::vector<std::size_t> pick;
    // Unordered multisets of q factors with at least two distinct entries.
    auto rec = [&](auto&& self, std::size_t from, long long left) -> void {
        if (left == 0) {
            bool constant = true;
            for (std::size_t i = 1; i < pick.size(); ++i)
                if (pick[i] != pick[0]) { constant = false; break; }
            if (constant) return;
            std::set<Partition, DescLex> support{sorted[pick[0]]};
            for (std::size_t i = 1; i < pick.size(); ++i) {
                std::set<Partition, DescLex> next;
                for (const auto& mu : support)
                    for (const auto& [lam, c] : mult_expand(mu, sorted[pick[i]])) next.insert(lam);
                support = std::move(next);
            }
            acc.insert(support.begin(), support.end());
            return;
        }
        for (std::size_t i = from; i < sorted.size(); ++i) {
            pick.push_back(i);
            self(self, i, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, q);
    return {acc.begin(), acc.end()};
}

} // namespace sbc
