#include <gacodes/groups.hpp>
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace gacodes;

namespace {

std::set<std::set<oracle::Vec>> as_tuples(const AbelianGroup& g, const std::vector<Subgroup>& subs) {
    std::set<std::set<oracle::Vec>> out;
    for (const auto& h : subs) {
        std::set<oracle::Vec> s;
        for (auto x : h.elements) s.insert(g.exponents(x));
        out.insert(s);
    }
    return out;
}

const std::vector<std::string> kMatrix{"C4", "C2xC2", "C9xC3", "C8", "C2xC4", "C3xC3", "C27xC3", "C5xC5", "C2xC2xC2", "C12", "C6xC2"};

}  // namespace

TEST(AbelianGroup, ParsesAndNormalizes) {
    auto g = AbelianGroup::parse("c9xC3");
    EXPECT_EQ(g.order(), 27u);
    EXPECT_EQ(g.exponent(), 9u);
    EXPECT_EQ(g.name(), "C9xC3");
    auto h = AbelianGroup::parse("C6");
    EXPECT_EQ(h.factor_orders(), (std::vector<std::uint64_t>{2, 3}));
    EXPECT_TRUE(h.is_cyclic());
    EXPECT_FALSE(AbelianGroup::parse("C2xC2").is_cyclic());
    EXPECT_THROW(AbelianGroup::parse("C9x"), ParseError);
    EXPECT_THROW(AbelianGroup::parse("Z9"), ParseError);
    EXPECT_THROW(AbelianGroup::parse(""), ParseError);
}

TEST(AbelianGroup, ElementIterationIsExhaustive) {
    auto g = AbelianGroup::parse("C9xC3");
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        auto e = g.exponents(i);
        EXPECT_EQ(g.index(e), i);
        seen.insert(e);
    }
    EXPECT_EQ(seen.size(), 27u);
    auto t = g.table();
    EXPECT_EQ(t->mul(g.index({8, 2}), g.index({2, 2})), g.index({1, 1}));
}

TEST(Subgroups, Examples) {
    EXPECT_EQ(all_subgroups(AbelianGroup::parse("C4")).size(), 3u);
    EXPECT_EQ(all_subgroups(AbelianGroup::parse("C2xC2")).size(), 5u);
    EXPECT_EQ(all_subgroups(AbelianGroup::parse("C9xC3")).size(), 10u);
    EXPECT_THROW(all_subgroups(AbelianGroup::parse("C101xC101")), BudgetExceeded);
}

TEST(Subgroups, MatchBruteForceOracle) {
    for (const auto& name : kMatrix) {
        auto g = AbelianGroup::parse(name);
        auto subs = all_subgroups(g);
        EXPECT_EQ(as_tuples(g, subs), oracle::subgroups(g.factor_orders())) << name;
        EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
    }
}

TEST(Subgroups, LagrangeAndClosure) {
    for (const auto& name : kMatrix) {
        auto g = AbelianGroup::parse(name);
        auto t = g.table();
        for (const auto& h : all_subgroups(g)) {
            EXPECT_EQ(g.order() % h.order(), 0u);
            EXPECT_TRUE(h.contains(0));
            for (auto x : h.elements) {
                EXPECT_TRUE(h.contains(t->inv(x)));
                for (auto y : h.elements) ASSERT_TRUE(h.contains(t->mul(x, y)));
            }
            EXPECT_EQ(generate_subgroup(*t, h.generators), h);
        }
    }
}

TEST(Cocyclic, Examples) {
    auto c4 = AbelianGroup::parse("C4");
    auto cc = cocyclic_subgroups(c4);
    ASSERT_EQ(cc.size(), 2u);
    EXPECT_TRUE(cc[0].is_trivial());
    EXPECT_EQ(cc[1].order(), 2u);

    auto v4 = cocyclic_subgroups(AbelianGroup::parse("C2xC2"));
    EXPECT_EQ(v4.size(), 3u);
    for (const auto& h : v4) EXPECT_EQ(h.order(), 2u);

    // seven co-cyclic subgroups; with G itself they index the eight primitive idempotents
    auto g = AbelianGroup::parse("C9xC3");
    EXPECT_EQ(cocyclic_subgroups(g).size(), 7u);
}

TEST(Cocyclic, MatchesQuotientOracleAndCyclicCase) {
    for (const auto& name : kMatrix) {
        auto g = AbelianGroup::parse(name);
        auto subs = all_subgroups(g);
        auto cc = cocyclic_subgroups(g);
        std::set<std::set<oracle::Vec>> expect;
        for (const auto& s : oracle::subgroups(g.factor_orders()))
            if (s.size() < g.order() && oracle::quotient_cyclic(g.factor_orders(), s)) expect.insert(s);
        EXPECT_EQ(as_tuples(g, cc), expect) << name;
        for (const auto& h : cc) EXPECT_NE(std::find(subs.begin(), subs.end(), h), subs.end());
        if (g.is_cyclic()) EXPECT_EQ(cc.size(), subs.size() - 1) << name;
    }
}

TEST(Sharp, Examples) {
    auto c4 = AbelianGroup::parse("C4");
    auto t4 = c4.table();
    EXPECT_EQ(sharp(c4, trivial_subgroup()).order(), 2u);

    auto g = AbelianGroup::parse("C9xC3");
    auto t = g.table();
    auto b = generate_subgroup(*t, {static_cast<std::uint32_t>(g.index({0, 1}))});
    auto s = sharp(g, b);
    EXPECT_EQ(s, generate_subgroup(*t, {static_cast<std::uint32_t>(g.index({3, 0})), static_cast<std::uint32_t>(g.index({0, 1}))}));
    EXPECT_EQ(subgroup_name(*t, s), "<a^3,b>");

    auto c9 = AbelianGroup::parse("C9");
    auto t9 = c9.table();
    EXPECT_EQ(sharp(c9, generate_subgroup(*t9, {3})).order(), 9u);
    EXPECT_THROW(sharp(AbelianGroup::parse("C6"), trivial_subgroup()), PreconditionError);
    EXPECT_THROW(sharp(c9, whole_group(*t9)), PreconditionError);
}

TEST(Sharp, IsTheUniqueIndexPOvergroupInsideACyclicQuotient) {
    for (const auto& name : {"C4", "C8", "C9xC3", "C27xC3", "C2xC4", "C5xC5", "C3xC3"}) {
        auto g = AbelianGroup::parse(name);
        auto t = g.table();
        const auto p = g.p_group_prime();
        auto subs = all_subgroups(g);
        for (const auto& h : cocyclic_subgroups(g)) {
            auto s = sharp(g, h);
            EXPECT_TRUE(h.subset_of(s));
            EXPECT_EQ(s.order(), h.order() * p);
            // any other index-p overgroup K of H fails: G/H cyclic forces K = H^sharp
            for (const auto& k : subs)
                if (h.subset_of(k) && k.order() == h.order() * p) EXPECT_EQ(k, s) << name;
        }
    }
}

TEST(Automorphisms, Examples) {
    EXPECT_EQ(automorphisms(AbelianGroup::parse("C3")).size(), 2u);
    EXPECT_EQ(automorphisms(AbelianGroup::parse("C2xC2")).size(), 6u);
    EXPECT_EQ(automorphisms(AbelianGroup::parse("C9")).size(), 6u);
    EXPECT_EQ(automorphisms(AbelianGroup::parse("C9xC3")).size(), 108u);
    EXPECT_THROW(automorphisms(AbelianGroup::parse("C2xC2xC2xC2xC2xC2"), 1000), BudgetExceeded);
}

TEST(Automorphisms, FormAGroup) {
    std::mt19937 rng(20261018);
    for (const auto& name : {"C2xC2", "C9xC3", "C2xC4", "C3xC3", "C12", "C2xC2xC2"}) {
        auto g = AbelianGroup::parse(name);
        auto t = g.table();
        auto auts = automorphisms(g);
        auto has = [&](const Automorphism& a) { return std::find(auts.begin(), auts.end(), a) != auts.end(); };
        for (const auto& a : auts)
            for (std::uint32_t x = 0; x < t->order; ++x)
                for (std::uint32_t y = 0; y < t->order; y += 3) ASSERT_EQ(a(t->mul(x, y)), t->mul(a(x), a(y)));
        const bool exhaustive = auts.size() < 200;
        const std::size_t samples = exhaustive ? auts.size() * auts.size() : 2000;
        std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
        for (std::size_t s = 0; s < samples; ++s) {
            const auto& f = exhaustive ? auts[s / auts.size()] : auts[pick(rng)];
            const auto& h = exhaustive ? auts[s % auts.size()] : auts[pick(rng)];
            ASSERT_TRUE(has(compose(f, h))) << name;
        }
        for (const auto& a : auts) {
            Automorphism inv;
            inv.perm.resize(t->order);
            for (std::uint32_t x = 0; x < t->order; ++x) inv.perm[a(x)] = x;
            EXPECT_TRUE(has(inv)) << name;
        }
    }
}

TEST(Characters, Examples) {
    auto f3 = make_extension(3, 1);
    auto c2 = characters(AbelianGroup::parse("C2"), f3);
    ASSERT_EQ(c2.size(), 2u);
    EXPECT_TRUE(c2[0][1].is_one());
    EXPECT_EQ(c2[1][1], f3.from_int(-1));

    auto f4 = make_extension(2, 2);
    auto c3 = characters(AbelianGroup::parse("C3"), f4);
    for (const auto& row : c3)
        for (const auto& v : row) EXPECT_TRUE(v.pow(3).is_one());
    auto w = c3[1][1];
    EXPECT_TRUE((w * w + w + f4.one()).is_zero());

    auto v4 = characters(AbelianGroup::parse("C2xC2"), f3);
    ASSERT_EQ(v4.size(), 4u);
    EXPECT_THROW(characters(AbelianGroup::parse("C4"), f3), PreconditionError);
}

TEST(Characters, RowsAreDistinctAndOrthogonal) {
    for (auto [name, p, m] : std::vector<std::tuple<std::string, std::uint64_t, unsigned>>{
             {"C2xC2", 3, 1}, {"C3xC3", 2, 2}, {"C9xC3", 2, 6}, {"C4", 5, 1}, {"C6", 7, 1}}) {
        auto g = AbelianGroup::parse(name);
        auto f = make_extension(p, m);
        auto rows = characters(g, f);
        std::set<std::vector<std::vector<std::uint64_t>>> distinct;
        for (std::size_t v = 0; v < rows.size(); ++v) {
            std::vector<std::vector<std::uint64_t>> key;
            auto s = f.zero();
            for (const auto& x : rows[v]) {
                key.push_back(x.coeffs());
                s = s + x;
            }
            distinct.insert(key);
            if (v == 0) EXPECT_EQ(s, f.from_int(static_cast<long long>(g.order())));
            else EXPECT_TRUE(s.is_zero()) << name;
        }
        EXPECT_EQ(distinct.size(), g.order());
    }
}

TEST(Arithmetic, PhiAndTau) {
    EXPECT_EQ(euler_phi(9), 6u);
    EXPECT_EQ(divisor_count(12), 6u);
    EXPECT_EQ(euler_phi(9), 9u - 3u);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        EXPECT_EQ(euler_phi(n), oracle::phi(n));
        EXPECT_EQ(divisor_count(n), oracle::tau(n));
    }
}

TEST(SylowComponents, CocyclicDecomposition) {
    // each Sylow component of a co-cyclic H is co-cyclic in G_p or equals G_p
    for (const auto& name : {"C12", "C6xC2", "C3xC11", "C2xC2xC3", "C9xC3xC2", "C15xC3"}) {
        auto g = AbelianGroup::parse(name);
        auto t = g.table();
        for (const auto& h : cocyclic_subgroups(g)) {
            for (auto p : detail::prime_divisors(g.order())) {
                auto gp = sylow_subgroup(*t, p);
                auto hp = intersect(*t, h, gp);
                bool ok = hp == gp || quotient_is_cyclic(*t, gp, hp);
                EXPECT_TRUE(ok) << name << " p=" << p;
            }
        }
    }
}
