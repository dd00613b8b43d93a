#include <gacodes/ffield.hpp>
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace gacodes;

namespace {

struct PM {
    std::uint64_t p;
    unsigned m;
};

// every field with q <= 64
const std::vector<PM> kSmallFields{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
                                   {7, 1}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {37, 1},
                                   {41, 1}, {43, 1}, {47, 1}, {53, 1}, {59, 1}, {61, 1}};

std::vector<FieldElement> all_elements(const Field& f) {
    std::vector<FieldElement> v;
    for (std::uint64_t i = 0; i < f.order_u64(); ++i) v.push_back(f.from_index(i));
    return v;
}

}  // namespace

TEST(FieldConstruction, PrimeFieldUsesModulusX) {
    auto f = make_extension(2, 1);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint64_t>{0, 1}));
    EXPECT_EQ(f.order_u64(), 2u);
}

TEST(FieldConstruction, F8SatisfiesFrobeniusIdentity) {
    auto f = make_extension(2, 3);
    EXPECT_TRUE(detail::is_irreducible(f.modulus(), 2));
    for (const auto& a : all_elements(f)) EXPECT_EQ(a.pow(8), a);
}

TEST(FieldConstruction, F9HasCyclicUnitGroup) {
    auto f = make_extension(3, 2);
    std::size_t generators = 0;
    for (const auto& a : all_elements(f)) {
        if (a.is_zero()) continue;
        std::uint64_t t = 1;
        for (auto x = a; !x.is_one(); x = x * a) ++t;
        EXPECT_EQ(t, element_order(a));
        generators += t == 8;
    }
    EXPECT_EQ(generators, oracle::phi(8));
}

TEST(FieldConstruction, RejectsBadInput) {
    EXPECT_THROW(make_extension(4, 1), PreconditionError);
    EXPECT_THROW(make_extension(2, 0), PreconditionError);
    EXPECT_THROW(make_extension(2, 2000), PreconditionError);
    EXPECT_THROW(SmallField::of_order(6), PreconditionError);
}

TEST(FieldConstruction, IsReproducible) {
    for (auto [p, m] : kSmallFields) EXPECT_EQ(make_extension(p, m).modulus(), make_extension(p, m).modulus());
}

TEST(FieldConstruction, ModulusIsLexicographicallyFirstIrreducible) {
    // independent scan: x^2 + x + 1 over F_2, x^2 + 1 over F_3, x^3 + x + 1 over F_2
    EXPECT_EQ(make_extension(2, 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(make_extension(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(make_extension(2, 3).modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
}

TEST(ElementOrder, Examples) {
    auto f = make_extension(7, 1);
    EXPECT_EQ(element_order(f.one()), 1u);
    EXPECT_EQ(element_order(f.from_int(3)), 6u);
    EXPECT_EQ(element_order(f.from_int(2)), 3u);
    EXPECT_THROW(element_order(f.zero()), PreconditionError);
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(primitive_root_of_unity(make_extension(3, 1), 2), make_extension(3, 1).from_int(2));
    auto z = primitive_root_of_unity(make_extension(7, 1), 3);
    EXPECT_TRUE(z == make_extension(7, 1).from_int(2) || z == make_extension(7, 1).from_int(4));
    auto f4 = make_extension(2, 2);
    auto w = primitive_root_of_unity(f4, 3);
    EXPECT_TRUE((w * w + w + f4.one()).is_zero());
    EXPECT_THROW(primitive_root_of_unity(make_extension(7, 1), 4), PreconditionError);
}

TEST(OrderMod, Examples) {
    EXPECT_EQ(order_mod(2, 9), 6u);
    EXPECT_EQ(order_mod(2, 7), 3u);
    EXPECT_EQ(order_mod(3, 2), 1u);
    EXPECT_THROW(order_mod(3, 9), PreconditionError);
    for (std::uint64_t n = 2; n <= 60; ++n)
        for (std::uint64_t q : {2u, 3u, 5u, 7u})
            if (std::gcd(q, n) == 1) EXPECT_EQ(order_mod(q, n), oracle::mult_order(q, n)) << q << " mod " << n;
}

TEST(FieldProperties, AxiomsHoldExhaustively) {
    for (auto [p, m] : kSmallFields) {
        auto f = make_extension(p, m);
        auto el = all_elements(f);
        if (el.size() > 32) el.resize(32);  // triples over a 32-element slice keep this cubic loop quick
        for (const auto& a : el) {
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
            for (const auto& b : el) {
                EXPECT_EQ(a + b, b + a);
                EXPECT_EQ(a * b, b * a);
                for (const auto& c : el) {
                    ASSERT_EQ((a * b) * c, a * (b * c));
                    ASSERT_EQ(a * (b + c), a * b + a * c);
                }
            }
        }
        for (const auto& a : all_elements(f))
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one()) << f.name();
    }
}

TEST(FieldProperties, FrobeniusIsAutomorphismFixingPrimeField) {
    for (auto [p, m] : kSmallFields) {
        auto f = make_extension(p, m);
        auto el = all_elements(f);
        std::set<std::vector<std::uint64_t>> images;
        std::size_t fixed = 0;
        for (const auto& a : el) {
            auto fa = a.pow(p);
            images.insert(fa.coeffs());
            if (fa == a) {
                ++fixed;
                EXPECT_TRUE(a.in_prime_field());
            }
            for (std::size_t j = 0; j < std::min<std::size_t>(el.size(), 16); ++j) {
                EXPECT_EQ((a + el[j]).pow(p), fa + el[j].pow(p));
                EXPECT_EQ((a * el[j]).pow(p), fa * el[j].pow(p));
            }
        }
        EXPECT_EQ(images.size(), el.size()) << f.name();
        EXPECT_EQ(fixed, p) << f.name();
    }
}

TEST(FieldProperties, ElementOrderDividesUnitCount) {
    for (auto [p, m] : kSmallFields) {
        auto f = make_extension(p, m);
        for (const auto& a : all_elements(f))
            if (!a.is_zero()) EXPECT_EQ((f.order_u64() - 1) % element_order(a), 0u);
    }
}

TEST(SmallFieldTables, AgreeWithPolynomialArithmetic) {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u}) {
        auto sf = SmallField::of_order(q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                auto x = sf.to_element(a), y = sf.to_element(b);
                ASSERT_EQ(sf.to_element(sf.add(a, b)), x + y);
                ASSERT_EQ(sf.to_element(sf.mul(a, b)), x * y);
                ASSERT_EQ(sf.to_element(sf.sub(a, b)), x - y);
            }
    }
}

TEST(LargeField, BigIntegerOrder) {
    auto f = make_extension(2, 100);
    auto x = f.generator_x();
    EXPECT_EQ(x.pow(f.order()), x);  // x^(2^100) = x
    EXPECT_THROW(f.order_u64(), PreconditionError);
}
