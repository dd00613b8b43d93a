#include <gacodes/dihedral.hpp>
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace gacodes;

namespace {

const DutraTableRow& row_labelled(const DutraTable& t, const std::string& label) {
    for (const auto& r : t.rows)
        if (r.row.label == label) return r;
    throw std::runtime_error("no row " + label);
}

}  // namespace

TEST(DihedralGroup, PresentationRelations) {
    for (std::uint32_t n : {1u, 2u, 3u, 4u, 9u, 15u}) {
        DihedralGroup d(n);
        const auto& t = *d.table();
        EXPECT_EQ(t.order, 2 * n);
        EXPECT_EQ(t.power(d.a(), n), 0u);
        EXPECT_EQ(t.mul(d.b(), d.b()), 0u);
        EXPECT_EQ(t.mul(t.mul(d.b(), d.a()), d.b()), t.inv(d.a()));
        for (std::uint32_t x = 0; x < t.order; ++x)
            for (std::uint32_t y = 0; y < t.order; ++y) {
                auto [i, j] = oracle::dihedral_mul(n, {x % n, x / n}, {y % n, y / n});
                ASSERT_EQ(t.mul(x, y), d.element(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
            }
    }
    EXPECT_EQ(DihedralGroup(4).name(), "D4");
    EXPECT_THROW(DihedralGroup(0), PreconditionError);
    EXPECT_THROW(DihedralGroup(6000), BudgetExceeded);
}

TEST(ConjugacyClasses, D3) {
    DihedralGroup d(3);
    auto cls = conjugacy_classes(*d.table());
    ASSERT_EQ(cls.size(), 3u);
    EXPECT_EQ(cls[0], (std::vector<std::uint32_t>{0}));
    EXPECT_EQ(cls[1], (std::vector<std::uint32_t>{d.element(1, 0), d.element(2, 0)}));
    EXPECT_EQ(cls[2], (std::vector<std::uint32_t>{d.element(0, 1), d.element(1, 1), d.element(2, 1)}));
}

TEST(ConjugacyClasses, AbelianGivesSingletons) {
    for (auto name : {"C9xC3", "C12"}) {
        auto t = AbelianGroup::parse(name).table();
        auto cls = conjugacy_classes(*t);
        EXPECT_EQ(cls.size(), t->order);
        for (const auto& c : cls) EXPECT_EQ(c.size(), 1u);
    }
}

TEST(ConjugacyClasses, MatchBruteForceCount) {
    EXPECT_EQ(conjugacy_classes(*DihedralGroup(4).table()).size(), 5u);
    for (std::uint32_t n = 2; n <= 30; ++n)
        EXPECT_EQ(conjugacy_classes(*DihedralGroup(n).table()).size(), oracle::dihedral_class_count(n)) << n;
}

TEST(ComponentCounts, Examples) {
    auto d3 = simple_component_counts(*DihedralGroup(3).table(), 5);
    EXPECT_TRUE(d3.minimal());
    EXPECT_EQ(d3.over_fq, 3u);
    auto d4 = simple_component_counts(*DihedralGroup(4).table(), 3);
    EXPECT_TRUE(d4.minimal());
    EXPECT_EQ(d4.over_fq, 5u);
    auto c9 = simple_component_counts(*AbelianGroup({9}).table(), 7);
    EXPECT_FALSE(c9.minimal());
    EXPECT_EQ(c9.over_fq, 5u);  // {1}, two orbits of order 3, two of order 9
    EXPECT_EQ(c9.over_q, 3u);
    EXPECT_THROW(simple_component_counts(*DihedralGroup(3).table(), 3), PreconditionError);
}

TEST(DihedralCondition, Examples) {
    EXPECT_EQ(dihedral_condition(4, 3), "i");
    EXPECT_EQ(dihedral_condition(8, 3), "ii");
    EXPECT_EQ(dihedral_condition(3, 5), "iii");
    EXPECT_EQ(dihedral_condition(9, 5), "iii");
    EXPECT_EQ(dihedral_condition(7, 11), "iv");
    EXPECT_FALSE(dihedral_condition(13, 3).has_value());
    EXPECT_THROW(dihedral_condition(6, 3), PreconditionError);
}

namespace {

// size of the subgroup of U(Z_m) generated by q and -1
std::size_t q_and_minus_one(std::uint64_t q, std::uint64_t m) {
    std::set<std::uint64_t> seen{1};
    std::vector<std::uint64_t> todo{1};
    while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (auto y : {x * q % m, x * (m - 1) % m})
            if (seen.insert(y).second) todo.push_back(y);
    }
    return seen.size();
}

}  // namespace

TEST(ConditionProperty, ConditionImpliesEqualCounts) {
    // conditions (i)-(ix) imply equal counts; the printed two-prime conditions (x), (xi) do so
    // only when q and -1 generate all of U(Z_m) for the odd part m
    std::size_t two_prime_failures = 0;
    for (std::uint32_t n = 2; n <= 60; ++n)
        for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
            if (std::gcd<std::uint64_t>(q, 2 * n) != 1) continue;
            auto c = dihedral_condition(n, q);
            auto minimal = simple_component_counts(*DihedralGroup(n).table(), q).minimal();
            if (!c) {
                EXPECT_FALSE(minimal) << n << " " << q;
                continue;
            }
            if (*c == "x" || *c == "xi") {
                const std::uint64_t odd = *c == "x" ? n : n / 2;
                EXPECT_EQ(minimal, q_and_minus_one(q, odd) == oracle::phi(odd)) << n << " " << q;
                two_prime_failures += !minimal;
            } else {
                EXPECT_TRUE(minimal) << n << " " << q << " " << *c;
            }
        }
    EXPECT_EQ(two_prime_failures, 8u);
}

TEST(ConditionProperty, TwoPrimeCounterexampleFailsVerification) {
    EXPECT_EQ(dihedral_condition(21, 5), "x");
    EXPECT_FALSE(simple_component_counts(*DihedralGroup(21).table(), 5).minimal());
    EXPECT_THROW(dutra_code_table(21, 5), VerificationError);
}

TEST(DutraIdempotents, N4Q3) {
    auto s = dutra_idempotents(4, 3);
    EXPECT_EQ(s.condition, "i");
    EXPECT_EQ(s.table, "2^m");
    ASSERT_EQ(s.system.size(), 5u);
    EXPECT_EQ(s.system.check(), "");
    // the split rows b^ a^, (1-b^) a^, b^ (a^2^ - a^), (1-b^)(a^2^ - a^)
    const auto& alg = *s.algebra;
    const auto& t = *s.group.table();
    auto bh = alg.hat(generate_subgroup(t, {s.group.b()}));
    auto ah = alg.hat(generate_subgroup(t, {s.group.a()}));
    auto a2h = alg.hat(generate_subgroup(t, {s.group.element(2, 0)}));
    std::vector<FieldElementVec> expected{bh * ah, (alg.one() - bh) * ah, bh * (a2h - ah), (alg.one() - bh) * (a2h - ah),
                                          alg.one() - a2h};
    for (const auto& e : expected)
        EXPECT_NE(std::find(s.system.members.begin(), s.system.members.end(), e), s.system.members.end());
}

TEST(DutraIdempotents, N3Q5) {
    auto s = dutra_idempotents(3, 5);
    ASSERT_EQ(s.system.size(), 3u);
    const auto& alg = *s.algebra;
    const auto& t = *s.group.table();
    auto bh = alg.hat(generate_subgroup(t, {s.group.b()}));
    auto ah = alg.hat(generate_subgroup(t, {s.group.a()}));
    for (const auto& e : {bh * ah, (alg.one() - bh) * ah, alg.one() - ah})
        EXPECT_NE(std::find(s.system.members.begin(), s.system.members.end(), e), s.system.members.end());
    EXPECT_EQ(s.system.sum(), alg.one());
}

TEST(DutraIdempotents, RejectsUnmatchedParameters) {
    EXPECT_THROW(dutra_idempotents(7, 2), PreconditionError);
    EXPECT_THROW(dutra_idempotents(3, 3), PreconditionError);
}

TEST(DutraCodeTable, N3Q5) {
    auto t = dutra_code_table(3, 5);
    auto& chain = row_labelled(t, "C3[1]");
    EXPECT_EQ(chain.dimension, 4u);
    EXPECT_EQ(chain.weight, 2u);
    auto& split = row_labelled(t, "b^*C3[0]");
    EXPECT_EQ(split.dimension, 1u);
    EXPECT_EQ(split.weight, 6u);
    for (const auto& r : t.rows) EXPECT_TRUE(r.matches_printed()) << r.row.label;
    EXPECT_TRUE(t.findings.empty());
}

TEST(DutraCodeTable, N4Q3) {
    auto t = dutra_code_table(4, 3);
    auto& r = row_labelled(t, "b^*C4[1]");
    EXPECT_EQ(r.dimension, 1u);
    EXPECT_EQ(r.weight, 8u);
    auto& top = row_labelled(t, "C4[2]");
    EXPECT_EQ(top.dimension, 4u);
    EXPECT_EQ(top.weight, 2u);  // 2^{m-i+1} at m = i = 2
    EXPECT_TRUE(t.findings.empty());
}

TEST(DutraCodeTable, N9Q5AtRaisedBudget) {
    auto t = dutra_code_table(9, 5, 1ULL << 28);
    EXPECT_EQ(t.system.condition, "iii");
    EXPECT_EQ(t.rows.size(), 4u);
    for (const auto& r : t.rows) EXPECT_TRUE(r.matches_printed()) << r.row.label;
    EXPECT_THROW(dutra_code_table(9, 5, 1000), BudgetExceeded);
}

TEST(DutraCodeTable, SuspectedMisprintsAreAnnotated) {
    for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{15, 7}, {12, 5}, {30, 7}}) {
        auto s = dutra_idempotents(n, q);
        bool noted = false;
        for (const auto& r : s.rows) noted = noted || !r.note.empty();
        EXPECT_TRUE(noted) << n << " " << q;
    }
}

TEST(DihedralProperties, CentralOrthogonalCompleteAndDimensionSum) {
    for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{
             {2, 3}, {4, 3}, {8, 3}, {3, 5}, {5, 3}, {9, 5}, {6, 5}, {12, 5}, {15, 7}, {10, 3}}) {
        auto s = dutra_idempotents(n, q);
        EXPECT_EQ(s.system.check(), "") << n;
        std::size_t dims = 0;
        for (const auto& e : s.system.members) {
            EXPECT_TRUE(e.is_central());
            dims += code_from_idempotent(e).dimension();
        }
        EXPECT_EQ(dims, 2ULL * n) << n << " " << q;
        auto counts = simple_component_counts(*s.group.table(), q);
        EXPECT_EQ(s.system.size(), counts.over_fq) << n << " " << q;
    }
}
