#include <gacodes/galg.hpp>
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace gacodes;

namespace {

FieldElementVec random_element(const FieldAlgebra& alg, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, alg.ring().size() - 1);
    std::vector<SmallField::value_type> c(alg.dimension());
    for (auto& x : c) x = d(rng);
    return alg.from_coeffs(c);
}

}  // namespace

TEST(Hat, Examples) {
    auto a = make_abelian_algebra("C2", 3);
    auto t = a.table();
    auto h = a.algebra->hat(whole_group(t));
    EXPECT_EQ(h.coeffs(), (std::vector<SmallField::value_type>{2, 2}));
    EXPECT_EQ(a.algebra->hat(trivial_subgroup()), a.algebra->one());

    auto c7 = make_abelian_algebra("C7", 2);
    auto g7 = c7.algebra->hat(whole_group(c7.table()));
    EXPECT_TRUE(g7.is_idempotent());
    EXPECT_EQ(g7.weight(), 7u);

    auto bad = make_abelian_algebra("C6", 3);
    EXPECT_THROW(bad.algebra->hat(whole_group(bad.table())), PreconditionError);
}

TEST(Weight, Examples) {
    auto a = make_abelian_algebra("C9xC3", 2);
    EXPECT_EQ(a.algebra->zero().weight(), 0u);
    EXPECT_EQ(a.algebra->hat(whole_group(a.table())).weight(), 27u);
    auto c4 = make_abelian_algebra("C4", 2);
    auto x = c4.algebra->one() + c4.algebra->basis(1);
    EXPECT_EQ(x.weight(), 2u);
    EXPECT_EQ(x.support(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Predicates, Examples) {
    auto a = make_abelian_algebra("C9", 2);
    EXPECT_TRUE(a.algebra->one().is_idempotent());
    EXPECT_TRUE(a.algebra->one().is_central());
    auto t = a.table();
    for (const auto& h : all_subgroups(a.group)) EXPECT_TRUE(a.algebra->hat(h).is_idempotent());
    // e_H = H^ - H#^ for H = {1} and <a^3> in C9
    auto c3 = generate_subgroup(t, {3});
    auto e1 = a.algebra->one() - a.algebra->hat(c3);
    auto e3 = a.algebra->hat(c3) - a.algebra->hat(whole_group(t));
    EXPECT_TRUE(e1.is_orthogonal(e3));

    // non-abelian: b is not central in D3
    std::vector<std::uint32_t> mul(36);
    for (std::uint32_t x = 0; x < 6; ++x)
        for (std::uint32_t y = 0; y < 6; ++y) {
            auto [i, j] = oracle::dihedral_mul(3, {x % 3, x / 3}, {y % 3, y / 3});
            mul[x * 6 + y] = static_cast<std::uint32_t>(i + 3 * j);
        }
    auto tab = std::make_shared<GroupTable>();
    tab->order = 6;
    tab->abelian = false;
    tab->mul_table = mul;
    tab->generators = {1, 3};
    tab->inverse = {0, 2, 1, 3, 4, 5};
    tab->coords.resize(6);
    for (std::uint32_t x = 0; x < 6; ++x) tab->coords[x] = {x % 3, x / 3};
    auto d3 = FieldAlgebra::make(tab, SmallField::of_order(5));
    EXPECT_FALSE(d3->basis(3).is_central());
    EXPECT_TRUE((d3->basis(1) + d3->basis(2)).is_central());
}

TEST(Involution, Examples) {
    auto c4 = make_abelian_algebra("C4", 2);
    EXPECT_EQ(c4.algebra->one().involution(), c4.algebra->one());
    EXPECT_EQ(c4.algebra->basis(1).involution(), c4.algebra->basis(3));
    auto a = make_abelian_algebra("C9xC3", 2);
    for (const auto& h : all_subgroups(a.group)) EXPECT_EQ(a.algebra->hat(h).involution(), a.algebra->hat(h));
}

TEST(Convolution, MatchesNaiveOracle) {
    std::mt19937 rng(7);
    for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"C9xC3", 2}, {"C6", 5}, {"C2xC2xC3", 7}, {"C5", 3}}) {
        auto a = make_abelian_algebra(name, p);
        for (int trial = 0; trial < 10; ++trial) {
            auto x = random_element(*a.algebra, rng), y = random_element(*a.algebra, rng);
            std::vector<std::uint64_t> xc(x.coeffs().begin(), x.coeffs().end()), yc(y.coeffs().begin(), y.coeffs().end());
            auto z = oracle::convolve(a.group.factor_orders(), xc, yc, p);
            const auto xy = x * y;
            EXPECT_EQ(std::vector<std::uint64_t>(xy.coeffs().begin(), xy.coeffs().end()), z) << name;
        }
    }
}

TEST(RingAxioms, RandomTriples) {
    std::mt19937 rng(2026);
    std::vector<std::pair<std::string, std::uint64_t>> groups{{"C7", 2},  {"C9xC3", 2}, {"C5xC5", 2}, {"C100", 3},
                                                              {"C12", 5}, {"C2xC4", 3}, {"C10xC10", 3}, {"C8", 9}};
    for (const auto& [name, q] : groups) {
        auto a = make_abelian_algebra(name, q);
        for (int trial = 0; trial < 100; ++trial) {
            auto x = random_element(*a.algebra, rng), y = random_element(*a.algebra, rng), z = random_element(*a.algebra, rng);
            ASSERT_EQ((x * y) * z, x * (y * z)) << name;
            ASSERT_EQ(x * (y + z), x * y + x * z) << name;
            ASSERT_EQ((x + y) * z, x * z + y * z) << name;
            ASSERT_LE((x + y).weight(), x.weight() + y.weight());
            ASSERT_EQ((x * y).involution(), y.involution() * x.involution());
            ASSERT_EQ(x.involution().involution(), x);
        }
    }
}

TEST(HatProducts, SylowHatsMultiplyToGroupHat) {
    for (auto [name, q] : std::vector<std::pair<std::string, std::uint64_t>>{{"C3xC5", 2}, {"C9xC3xC5", 2}, {"C4xC3", 5}, {"C3xC5xC11", 2}}) {
        auto a = make_abelian_algebra(name, q);
        const auto& t = a.table();
        auto prod = a.algebra->one();
        for (auto p : detail::prime_divisors(a.group.order())) prod *= a.algebra->hat(sylow_subgroup(t, p));
        EXPECT_EQ(prod, a.algebra->hat(whole_group(t))) << name;
    }
    // H^ K^ = (HK)^ for two subgroups of C9xC3
    auto a = make_abelian_algebra("C9xC3", 2);
    const auto& t = a.table();
    auto subs = all_subgroups(a.group);
    for (const auto& h : subs)
        for (const auto& k : subs) {
            auto gens = h.generators;
            gens.insert(gens.end(), k.generators.begin(), k.generators.end());
            EXPECT_EQ(a.algebra->hat(h) * a.algebra->hat(k), a.algebra->hat(generate_subgroup(t, gens)));
        }
}

TEST(Rendering, TextAndJson) {
    auto a = make_abelian_algebra("C9xC3", 2);
    auto x = a.algebra->basis(a.group.index({3, 1}));
    EXPECT_EQ(x.to_string(), "1*[3,1]");
    EXPECT_EQ(a.algebra->zero().to_string(), "0");
    EXPECT_EQ(x.to_json().size(), 27u);
}
