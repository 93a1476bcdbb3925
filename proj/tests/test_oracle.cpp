#include "sbc/oracle.hpp"

#include "sbc/lr.hpp"

#include <array>
#include <doctest.h>
#include <numeric>
#include <random>
#include <set>

using namespace sbc;

namespace {

const int P = 5;

CharDescriptor lin(std::initializer_list<int> labels) {
    std::vector<int> v(labels);
    return CharDescriptor(P, {TreeOrbit(LabelledTree::linear(P, v))});
}

// Element of the level-2 wreath product as (base exponents, top power), with
// the product convention (x;g)(y;h) = (x + g.y; g+h), (g.y)_i = y_{i-g}.
struct Elt {
    std::array<int, 5> x{};
    int c = 0;
};

Elt mul(const Elt& a, const Elt& b) {
    Elt r;
    r.c = (a.c + b.c) % 5;
    for (int i = 0; i < 5; ++i)
        r.x[static_cast<std::size_t>(i)] =
            (a.x[static_cast<std::size_t>(i)] + b.x[static_cast<std::size_t>((i - a.c % 5 + 5) % 5)]) % 5;
    return r;
}

// Monomial model of the level-2 characters: linear characters as scalars,
// induced characters as 5x5 monomial matrices of the induced representation.
using Mat = std::vector<std::vector<CyclotomicInt>>;

Mat zero_matrix() { return Mat(5, std::vector<CyclotomicInt>(5, CyclotomicInt(5))); }

Mat induced_matrix(const std::array<int, 5>& eps, const Elt& g) {
    Mat m = zero_matrix();
    for (int r = 0; r < 5; ++r)
        for (int rp = 0; rp < 5; ++rp) {
            if (((g.c - r + rp) % 5 + 5) % 5 != 0) continue;
            // base part of t_r^{-1} g t_{r'}: coordinates x_{(i+r) mod 5}
            long long e = 0;
            for (int i = 0; i < 5; ++i)
                e += static_cast<long long>(eps[static_cast<std::size_t>(i)]) *
                     g.x[static_cast<std::size_t>((i + r) % 5)];
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(rp)] =
                CyclotomicInt::root_power(5, e);
        }
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    Mat r = zero_matrix();
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k)
            for (int j = 0; j < 5; ++j)
                r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return r;
}

CyclotomicInt trace(const Mat& m) {
    CyclotomicInt t(5);
    for (int i = 0; i < 5; ++i)
        t += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return t;
}

Elt class_rep(const ComponentClass& c) {
    Elt e;
    if (c.skew) {
        e.c = c.j;
        e.x[0] = c.s;
    } else {
        for (int i = 0; i < 5; ++i) e.x[static_cast<std::size_t>(i)] = c.base[static_cast<std::size_t>(i)];
    }
    return e;
}

} // namespace

TEST_CASE("cyclic group classes") {
    auto cls = conjugacy_classes(P, 5);
    REQUIRE(cls.size() == 5);
    for (const auto& g : cls) CHECK(g.size == 1);
    CHECK(cls[0].cycle_type == Partition{1, 1, 1, 1, 1});
    CHECK(cls[1].cycle_type == Partition{5});
    CHECK(cls[0].is_identity);
    CHECK(group_order(P, 5) == 5);
}

TEST_CASE("level-2 classes") {
    auto cls = conjugacy_classes(P, 25);
    REQUIRE(cls.size() == 649);
    long long total = 0;
    int size1 = 0, size5 = 0, size625 = 0, identity = 0;
    for (const auto& g : cls) {
        total += g.size;
        if (g.size == 1) ++size1;
        if (g.size == 5) ++size5;
        if (g.size == 625) ++size625;
        if (g.is_identity) ++identity;
        if (g.comps[0].skew)
            CHECK(g.cycle_type == (g.comps[0].s == 0 ? Partition{5, 5, 5, 5, 5} : Partition{25}));
    }
    CHECK(total == 15625);
    CHECK(group_order(P, 25) == 15625);
    CHECK(size1 == 5);
    CHECK(size5 == 624);
    CHECK(size625 == 20);
    CHECK(identity == 1);
}

TEST_CASE("product group classes and the scale guard") {
    CHECK(conjugacy_classes(P, 30).size() == 3245);
    CHECK(group_order(P, 30) == 78125);
    CHECK(conjugacy_classes(P, 6).size() == 5);
    CHECK_THROWS_AS(conjugacy_classes(P, 125), std::invalid_argument);
    CHECK_THROWS_AS(group_order(P, 125), std::invalid_argument);
}

TEST_CASE("level-2 class data against brute-force enumeration") {
    CHECK(validate_level2_classes_by_enumeration(5) == "");
    CHECK(validate_level2_classes_by_enumeration(3) == "");
}

TEST_CASE("character values of the cyclic group") {
    auto cls = conjugacy_classes(P, 5);
    for (int eps = 0; eps < 5; ++eps) {
        auto theta = lin({eps});
        for (int j = 0; j < 5; ++j)
            CHECK(theta_value(theta, cls[static_cast<std::size_t>(j)]) ==
                  CyclotomicInt::root_power(5, eps * j));
    }
}

TEST_CASE("level-2 character value formulas against the monomial model") {
    auto cls = conjugacy_classes(P, 25);
    std::mt19937_64 rng(20240);

    // the induced representation is a homomorphism
    std::array<int, 5> eps{0, 1, 0, 2, 3};
    for (int trial = 0; trial < 40; ++trial) {
        Elt a, b;
        for (int i = 0; i < 5; ++i) {
            a.x[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 5);
            b.x[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 5);
        }
        a.c = static_cast<int>(rng() % 5);
        b.c = static_cast<int>(rng() % 5);
        CHECK(matmul(induced_matrix(eps, a), induced_matrix(eps, b)) ==
              induced_matrix(eps, mul(a, b)));
    }

    // closed-form values match the model traces on every class
    for (const auto& g : cls) {
        Elt rep = class_rep(g.comps[0]);
        // all linear characters
        for (int delta = 0; delta < 5; ++delta)
            for (int e = 0; e < 5; ++e) {
                std::vector<int> labels{delta, e};
                CharDescriptor theta(P, {TreeOrbit(LabelledTree::linear(P, labels))});
                long long sum = std::accumulate(rep.x.begin(), rep.x.end(), 0LL);
                CyclotomicInt expect =
                    CyclotomicInt::root_power(5, delta * sum + static_cast<long long>(e) * rep.c);
                CHECK(theta_value(theta, g) == expect);
            }
        // a sample of induced characters
        for (int trial = 0; trial < 3; ++trial) {
            std::array<int, 5> labels;
            do {
                for (auto& l : labels) l = static_cast<int>(rng() % 5);
            } while (std::all_of(labels.begin(), labels.end(),
                                 [&](int l) { return l == labels[0]; }));
            std::vector<LabelledTree> leaves;
            for (int l : labels) leaves.push_back(LabelledTree::leaf(P, l));
            CharDescriptor theta(P, {TreeOrbit(LabelledTree::node(5, leaves))});
            CHECK(theta_value(theta, g) == trace(induced_matrix(labels, rep)));
        }
    }
}

TEST_CASE("specific character values") {
    auto cls = conjugacy_classes(P, 25);
    // an induced character vanishes off the base subgroup
    std::vector<LabelledTree> leaves;
    for (int l : {0, 0, 0, 0, 1}) leaves.push_back(LabelledTree::leaf(P, l));
    CharDescriptor induced(P, {TreeOrbit(LabelledTree::node(5, leaves))});
    for (const auto& g : cls) {
        if (!g.comps[0].skew) continue;
        CHECK(theta_value(induced, g).is_zero());
        // the tower of the people-row over the trivial top: value 1 at skew
        // classes with zero cycle product and top power anything
        if (g.comps[0].s == 0)
            CHECK(theta_value(lin({1, 0}), g) == CyclotomicInt(5, 1));
    }
    // degrees read off the identity class
    for (const auto& orbit : enumerate_irr(5, 2)) {
        CharDescriptor theta(P, {orbit});
        for (const auto& g : cls)
            if (g.is_identity) {
                auto v = theta_value(theta, g);
                CHECK(v.is_rational_integer());
                CHECK(v.rational_part() == static_cast<long long>(theta.degree().to_u64()));
            }
    }
}

TEST_CASE("the level-2 character table is orthonormal") {
    auto cls = conjugacy_classes(P, 25);
    auto orbits = enumerate_irr(5, 2);
    std::vector<CharDescriptor> thetas;
    for (const auto& o : orbits) thetas.emplace_back(P, std::vector<TreeOrbit>{o});
    std::vector<std::vector<CyclotomicInt>> values;
    for (const auto& t : thetas) {
        std::vector<CyclotomicInt> row;
        for (const auto& g : cls) row.push_back(theta_value(t, g));
        values.push_back(std::move(row));
    }
    auto inner = [&](std::size_t a, std::size_t b) {
        CyclotomicInt acc(5);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            CyclotomicInt term = values[a][i] * values[b][i].conjugate();
            term *= cls[i].size;
            acc += term;
        }
        return acc;
    };
    long long order = group_order(P, 25);
    // sum of squared degrees
    long long degsq = 0;
    for (const auto& t : thetas) {
        long long d = static_cast<long long>(t.degree().to_u64());
        degsq += d * d;
    }
    CHECK(degsq == order);
    // diagonal norms
    for (std::size_t a = 0; a < thetas.size(); ++a)
        CHECK(inner(a, a) == CyclotomicInt(5, order));
    // random off-diagonal pairs
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t a = rng() % thetas.size(), b = rng() % thetas.size();
        if (a == b) continue;
        CHECK(inner(a, b).is_zero());
    }
}

TEST_CASE("symmetric group character values") {
    CHECK(mn_char(Partition{5}, Partition{5}) == 1);
    CHECK(mn_char(Partition{1, 1, 1, 1, 1}, Partition{5}) == 1);
    CHECK(mn_char(Partition{4, 1}, Partition{5}) == -1);
    // the standard character counts fixed points minus one
    for (const auto& type : enumerate_partitions(5)) {
        long long fixed = 0;
        for (long long part : type.parts())
            if (part == 1) ++fixed;
        CHECK(mn_char(Partition{4, 1}, type) == fixed - 1);
    }
    // hook sign: chi^{(1^n)} is the sign character
    for (const auto& type : enumerate_partitions(6)) {
        long long even_parts = 0;
        for (long long part : type.parts())
            if (part % 2 == 0) ++even_parts;
        CHECK(mn_char(Partition{1, 1, 1, 1, 1, 1}, type) == (even_parts % 2 ? -1 : 1));
    }
    CHECK_THROWS_AS(mn_char(Partition{3, 1}, Partition{5}), std::invalid_argument);
}

TEST_CASE("character degrees against tableau counting") {
    for (long long n = 1; n <= 12; ++n) {
        std::vector<long long> ones(static_cast<std::size_t>(n), 1);
        Partition id{ones};
        for (const auto& lam : enumerate_partitions(n))
            CHECK(mn_char(lam, id) == dim_syt(lam));
    }
    CHECK(dim_syt(Partition{3, 2}) == 5);
    CHECK(dim_syt(Partition{4, 3, 2, 1}) == 768);
}

TEST_CASE("column orthogonality of symmetric group characters") {
    const long long n = 6;
    auto types = enumerate_partitions(n);
    auto centralizer = [&](const Partition& type) {
        std::map<long long, long long> mult;
        for (long long part : type.parts()) ++mult[part];
        long long z = 1;
        for (auto [part, m] : mult) {
            for (long long i = 0; i < m; ++i) z *= part;
            for (long long i = 2; i <= m; ++i) z *= i;
        }
        return z;
    };
    for (const auto& c1 : types)
        for (const auto& c2 : types) {
            long long sum = 0;
            for (const auto& lam : enumerate_partitions(n))
                sum += mn_char(lam, c1) * mn_char(lam, c2);
            CHECK(sum == (c1 == c2 ? centralizer(c1) : 0));
        }
}

TEST_CASE("branching coefficients of the cyclic group") {
    CHECK(restriction_mult(Partition{4, 1}, lin({1})) == 1);
    CHECK(restriction_mult(Partition{4, 1}, lin({0})) == 0);
    CHECK(restriction_mult(Partition{5}, lin({0})) == 1);
    CHECK(restriction_mult(Partition{3, 2}, lin({0})) == 1);
    CHECK(restriction_mult(Partition{20, 5}, lin({1, 2})) == 0);
    CHECK_THROWS_AS(restriction_mult(Partition{4, 1}, lin({1, 2})), std::invalid_argument);
}

TEST_CASE("constituent sets from the brute force") {
    auto phi0 = omega_oracle(CharDescriptor::trivial(P, 5));
    CHECK(phi0 == SymbolicPartitionSet::punctured_full(5).materialize());
    auto phi2 = omega_oracle(lin({2}));
    CHECK(phi2 == SymbolicPartitionSet::box(5, 4).materialize());
    auto tower = omega_oracle(lin({1, 0}));
    CHECK(tower == SymbolicPartitionSet::punctured_box(25, 20).materialize());
}

TEST_CASE("batched matrix agrees with single inner products") {
    auto lambdas = enumerate_partitions(25);
    auto orbits = enumerate_irr(5, 2);
    std::vector<CharDescriptor> sample;
    std::vector<Partition> rows;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 6; ++i) {
        sample.emplace_back(P, std::vector<TreeOrbit>{orbits[rng() % orbits.size()]});
        rows.push_back(lambdas[rng() % lambdas.size()]);
    }
    auto matrix = branching_matrix(rows, sample, 2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t t = 0; t < sample.size(); ++t)
            CHECK(matrix[i][t] == restriction_mult(rows[i], sample[t]));
}

TEST_CASE("induced constituents of a mixed tuple factor through the parts") {
    // the constituent set of an induced mixed character is the star product
    // of the constituent sets of its factors; one representative per
    // people-pattern is enough since equivalent characters induce equally
    auto expect_for_eta = [&](long long eta) {
        std::vector<std::vector<Partition>> sets;
        for (long long i = 0; i < 5; ++i)
            sets.push_back(i < eta ? SymbolicPartitionSet::box(5, 4).materialize()
                                   : SymbolicPartitionSet::punctured_full(5).materialize());
        std::vector<Partition> acc = sets[0];
        for (std::size_t i = 1; i < sets.size(); ++i) acc = star_explicit(acc, sets[i]);
        return acc;
    };
    for (long long eta = 1; eta <= 5; ++eta) {
        std::vector<LabelledTree> leaves;
        for (long long i = 0; i < 5; ++i)
            leaves.push_back(LabelledTree::leaf(P, i < eta ? (i == 4 ? 2 : 1) : 0));
        CharDescriptor theta(P, {TreeOrbit(LabelledTree::node(5, leaves))});
        CHECK(omega_oracle(theta) == expect_for_eta(eta));
    }
}

TEST_CASE("verification report for single characters") {
    auto rep = verify_theta(lin({1, 0}));
    CHECK(rep.ok());
    CHECK(rep.n == 25);
    auto rep5 = verify_theta(lin({3}));
    CHECK(rep5.ok());
}

TEST_CASE("composite shapes against the brute force") {
    // one character per composed shape family on 30 points: punctured box,
    // plain box, the full set (trivial character), and an inexact bound
    const char* cases[] = {
        "0 * X(1;0)",  // punctured set * punctured box -> punctured box
        "4 * X(1;0)",  // box * punctured box -> box
        "0 * X(0;0)",  // trivial: full set
        "0 * X(1;2)",  // punctured set * layered -> bounded
        "3 * X(2;4)",  // box * layered -> bounded
    };
    for (const char* text : cases) {
        auto rep = verify_theta(CharDescriptor::parse(P, text));
        INFO(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("sweep verification at the base level") {
    auto rep = verify_sweep(P, 5);
    CHECK(rep.ok());
    CHECK_THROWS_AS(verify_sweep(P, 7), std::invalid_argument);
}
