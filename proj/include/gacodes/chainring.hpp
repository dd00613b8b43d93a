#pragma once

// Codes in R C_n for the chain ring R = Z_{p^k}, gcd(p, n) = 1. Every ideal is
// a direct sum of <p^{k_i} e_i> over the lifted primitive idempotents e_i, so a
// code is an exponent tuple (k_0, ..., k_m) with 0 <= k_i <= t = k.

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "codes.hpp"
#include "detail/arith.hpp"
#include "error.hpp"
#include "galg.hpp"
#include "groups.hpp"
#include "idem.hpp"

namespace gacodes {

/// Z_N with the coefficient-ring interface of GroupAlgebra.
class ZModRing {
public:
    using value_type = std::uint32_t;

    explicit ZModRing(std::uint64_t modulus) : n_(modulus) {
        detail::require(modulus >= 2 && modulus < (1ULL << 31), "ZModRing: modulus out of range");
    }

    std::uint64_t modulus() const { return n_; }
    std::string name() const { return "Z" + std::to_string(n_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_unit(value_type a) const { return std::gcd<std::uint64_t>(a, n_) == 1; }
    value_type from_int(long long x) const {
        const long long n = static_cast<long long>(n_);
        return static_cast<value_type>(((x % n) + n) % n);
    }
    value_type add(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t(a) + b) % n_); }
    value_type neg(value_type a) const { return a ? static_cast<value_type>(n_ - a) : 0; }
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t(a) * b % n_); }
    value_type inv(value_type a) const { return static_cast<value_type>(detail::mod_inverse(a, n_)); }
    std::string to_string(value_type a) const { return std::to_string(a); }
    long long to_integer(value_type a) const { return a; }

    friend bool operator==(const ZModRing& a, const ZModRing& b) { return a.n_ == b.n_; }

private:
    std::uint64_t n_;
};

using RingAlgebra = GroupAlgebra<ZModRing>;
using RingElement = AlgebraElement<ZModRing>;

/// Z_{p^k}: maximal ideal <p>, nilpotency index t = k, residue field F_p.
struct ChainRing {
    std::uint64_t p = 2;
    unsigned k = 1;

    ChainRing(std::uint64_t prime, unsigned exponent) : p(prime), k(exponent) {
        if (!detail::is_prime(prime)) throw PreconditionError("ChainRing: " + std::to_string(prime) + " is not prime");
        detail::require(exponent >= 1, "ChainRing: exponent must be positive");
        detail::checked_pow(prime, exponent);
    }
    /// Parses "Z4", "Z9", "Z8", ...
    static ChainRing parse(const std::string& text) {
        if (text.size() < 2 || (text[0] != 'Z' && text[0] != 'z')) throw ParseError("ring spec must look like Z4, got '" + text + "'");
        std::uint64_t n = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("ring spec must look like Z4, got '" + text + "'");
            n = n * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (n > (1ULL << 31)) throw ParseError("ring modulus too large: " + text);
        }
        auto [p, e] = detail::prime_power(n);
        if (p == 0) throw ParseError("Z_n is a chain ring only for prime powers n, got " + text);
        return ChainRing(p, e);
    }

    unsigned t() const { return k; }
    std::uint64_t size() const { return detail::checked_pow(p, k); }
    ZModRing ring() const { return ZModRing(size()); }
    SmallField residue_field() const { return SmallField::prime(p); }
    std::string name() const { return "Z" + std::to_string(size()); }
    /// Size of the ideal <p^i>.
    std::uint64_t ideal_size(unsigned i) const { return i >= k ? 1 : detail::checked_pow(p, k - i); }
};

/// Hensel lifting e <- 3e^2 - 2e^3 of a system over F_p to Z_{p^k}, ceil(log2 k) + 1 rounds.
inline IdempotentSystem<ZModRing> lift_idempotents(const FieldIdempotents& sys, const ChainRing& r) {
    const auto& base = sys.algebra->ring();
    if (base.degree() != 1 || base.characteristic() != r.p)
        throw PreconditionError("lift_idempotents: the system must live over F_" + std::to_string(r.p));
    const auto& tp = sys.algebra->group_ptr();
    if (tp->order % r.p == 0) throw PreconditionError("lift_idempotents: gcd(p, |G|) != 1");
    auto alg = RingAlgebra::make(tp, r.ring());
    unsigned rounds = 1;
    while ((1U << (rounds - 1)) < r.k) ++rounds;  // ceil(log2 k) + 1
    IdempotentSystem<ZModRing> out;
    out.algebra = alg;
    const auto three = alg->one().scaled(3), two = alg->one().scaled(2);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        std::vector<ZModRing::value_type> c(sys.members[i].coeffs().begin(), sys.members[i].coeffs().end());
        auto e = alg->from_coeffs(std::move(c));
        for (unsigned it = 0; it < rounds; ++it) {
            auto e2 = e * e;
            e = three * e2 - two * (e2 * e);
        }
        detail::verify(e.is_idempotent(), "lifted element is not idempotent");
        for (std::size_t g = 0; g < e.size(); ++g)
            detail::verify(e[static_cast<std::uint32_t>(g)] % r.p == sys.members[i][static_cast<std::uint32_t>(g)],
                           "lift does not reduce to the source idempotent");
        out.add(std::move(e), sys.labels[i]);
    }
    out.validate();
    return out;
}

struct RingCode {
    std::vector<unsigned> exponents;  // k_i; t means the component is absent
    friend bool operator==(const RingCode&, const RingCode&) = default;
    friend auto operator<=>(const RingCode&, const RingCode&) = default;
};

/// Lifted primitive system of R C_n together with the data every ring-code computation needs.
struct RingCodeSpace {
    ChainRing ring;
    AbelianGroup group;
    FieldIdempotents residue;
    IdempotentSystem<ZModRing> lifted;
    std::vector<std::size_t> widths;       // w_s = dim of F_pC_n e_s
    std::vector<std::size_t> involution;   // e_r* = e_{involution[r]}

    unsigned t() const { return ring.t(); }
    std::size_t components() const { return lifted.size(); }
    std::size_t length() const { return group.order(); }
    const RingAlgebra& algebra() const { return *lifted.algebra; }
};

inline RingCodeSpace ring_code_space(const ChainRing& r, const AbelianGroup& g) {
    if (g.order() % r.p == 0) throw PreconditionError("ring_code_space: gcd(p, n) != 1");
    auto a = make_abelian_algebra(g, r.residue_field());
    RingCodeSpace s{r, g, primitive_idempotents(a), {}, {}, {}};
    s.lifted = lift_idempotents(s.residue, r);
    for (const auto& e : s.residue.members) s.widths.push_back(code_from_idempotent(e).dimension());
    for (std::size_t i = 0; i < s.lifted.size(); ++i) {
        auto star = s.lifted.members[i].involution();
        std::size_t hit = s.lifted.size();
        for (std::size_t j = 0; j < s.lifted.size(); ++j)
            if (s.lifted.members[j] == star) hit = j;
        detail::verify(hit < s.lifted.size(), "involution of a lifted primitive idempotent is not in the system");
        s.involution.push_back(hit);
    }
    return s;
}

inline RingCodeSpace ring_code_space(const ChainRing& r, std::uint64_t n) { return ring_code_space(r, AbelianGroup({n})); }

/// All (t+1)^{m+1} exponent tuples, lexicographic.
inline std::vector<RingCode> enumerate_ring_codes(const RingCodeSpace& s, std::uint64_t budget = 1ULL << 20) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < s.components(); ++i) {
        if (total > budget / (s.t() + 1)) throw BudgetExceeded("enumerate_ring_codes: more than " + std::to_string(budget) + " codes");
        total *= s.t() + 1;
    }
    std::vector<RingCode> out;
    RingCode c{std::vector<unsigned>(s.components(), 0)};
    for (;;) {
        out.push_back(c);
        std::size_t i = c.exponents.size();
        while (i-- > 0) {
            if (++c.exponents[i] <= s.t()) break;
            c.exponents[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

/// |C| = p^{sum (t - k_s) w_s}.
inline boost::multiprecision::cpp_int codeword_count(const RingCodeSpace& s, const RingCode& c) {
    detail::require(c.exponents.size() == s.components(), "codeword_count: wrong tuple length");
    unsigned long long e = 0;
    for (std::size_t i = 0; i < s.components(); ++i) {
        detail::require(c.exponents[i] <= s.t(), "codeword_count: exponent above t");
        e += static_cast<unsigned long long>(s.t() - c.exponents[i]) * s.widths[i];
    }
    return boost::multiprecision::pow(boost::multiprecision::cpp_int(s.ring.p), static_cast<unsigned>(e));
}

/// C^perp = sum <p^{t-k_r} e_r*>: exponent t - k_r sits at the index of e_r*.
inline RingCode dual_code(const RingCodeSpace& s, const RingCode& c) {
    RingCode d{std::vector<unsigned>(s.components(), 0)};
    for (std::size_t r = 0; r < s.components(); ++r) d.exponents[s.involution[r]] = s.t() - c.exponents[r];
    return d;
}

inline bool is_self_dual(const RingCodeSpace& s, const RingCode& c) { return dual_code(s, c) == c; }

/// Additive generators g * p^{k_i} e_i of the code.
inline std::vector<RingElement> ring_code_generators(const RingCodeSpace& s, const RingCode& c) {
    std::vector<RingElement> out;
    const auto& alg = s.algebra();
    for (std::size_t i = 0; i < s.components(); ++i) {
        if (c.exponents[i] >= s.t()) continue;
        auto x = s.lifted.members[i].scaled(static_cast<ZModRing::value_type>(detail::checked_pow(s.ring.p, c.exponents[i])));
        for (std::uint32_t g = 0; g < alg.dimension(); ++g) out.push_back(x.left_shift(g));
    }
    return out;
}

namespace detail {

using Word = std::vector<ZModRing::value_type>;

/// Additive span of the given words, by breadth-first closure; throws above the budget.
inline std::set<Word> additive_span(const ZModRing& r, std::size_t n, const std::vector<Word>& gens, std::uint64_t budget) {
    std::set<Word> seen{Word(n, 0)};
    std::vector<Word> frontier{Word(n, 0)};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Word y(n);
                for (std::size_t i = 0; i < n; ++i) y[i] = r.add(x[i], g[i]);
                if (seen.insert(y).second) {
                    if (seen.size() > budget) throw BudgetExceeded("additive span exceeds " + std::to_string(budget) + " words");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace detail

/// Every codeword, by explicit closure (desk scale cross-check of codeword_count).
inline std::set<detail::Word> ring_code_words(const RingCodeSpace& s, const RingCode& c, std::uint64_t budget = 1ULL << 20) {
    std::vector<detail::Word> gens;
    for (const auto& x : ring_code_generators(s, c)) gens.push_back(x.coeffs());
    return detail::additive_span(s.algebra().ring(), s.length(), gens, budget);
}

/// {x : sum_g x_g y_g = 0 for all y in C}, by scanning all of RG.
inline std::set<detail::Word> euclidean_annihilator(const RingCodeSpace& s, const RingCode& c, std::uint64_t budget = 1ULL << 20) {
    const auto& r = s.algebra().ring();
    const auto n = s.length();
    const auto q = r.modulus();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / q) throw BudgetExceeded("euclidean_annihilator: |RG| exceeds the budget");
        total *= q;
    }
    std::vector<detail::Word> gens;
    for (const auto& x : ring_code_generators(s, c)) gens.push_back(x.coeffs());
    std::set<detail::Word> out;
    detail::Word x(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto v = idx;
        for (std::size_t i = 0; i < n; ++i, v /= q) x[i] = static_cast<ZModRing::value_type>(v % q);
        bool ok = true;
        for (const auto& g : gens) {
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += std::uint64_t(x[i]) * g[i];
            if (dot % q) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(x);
    }
    return out;
}

/// The codes <p^{t-1} e_i>.
inline std::vector<RingCode> minimal_ring_codes(const RingCodeSpace& s) {
    std::vector<RingCode> out;
    for (std::size_t i = 0; i < s.components(); ++i) {
        RingCode c{std::vector<unsigned>(s.components(), s.t())};
        c.exponents[i] = s.t() - 1;
        out.push_back(std::move(c));
    }
    return out;
}

/// True iff every nonzero codeword generates the whole code as an ideal.
inline bool is_minimal_ring_code(const RingCodeSpace& s, const RingCode& c, std::uint64_t budget = 1ULL << 20) {
    auto words = ring_code_words(s, c, budget);
    if (words.size() <= 1) return false;
    const auto& alg = s.algebra();
    for (const auto& w : words) {
        if (std::all_of(w.begin(), w.end(), [](auto v) { return v == 0; })) continue;
        auto x = alg.from_coeffs(w);
        std::vector<detail::Word> gens;
        for (std::uint32_t g = 0; g < alg.dimension(); ++g) gens.push_back(x.left_shift(g).coeffs());
        if (detail::additive_span(alg.ring(), s.length(), gens, budget).size() != words.size()) return false;
    }
    return true;
}

/// Every ideal of RG found by joining principal ideals until nothing new appears.
inline std::vector<std::set<detail::Word>> ideal_census(const RingCodeSpace& s, std::uint64_t budget = 1ULL << 16) {
    const auto& alg = s.algebra();
    const auto& r = alg.ring();
    const auto n = s.length();
    const auto q = r.modulus();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / q) throw BudgetExceeded("ideal_census: |RG| exceeds the budget");
        total *= q;
    }
    auto principal = [&](const detail::Word& w) {
        auto x = alg.from_coeffs(w);
        std::vector<detail::Word> gens;
        for (std::uint32_t g = 0; g < alg.dimension(); ++g) gens.push_back(x.left_shift(g).coeffs());
        return detail::additive_span(r, n, gens, budget);
    };
    std::set<std::set<detail::Word>> ideals;
    detail::Word w(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto v = idx;
        for (std::size_t i = 0; i < n; ++i, v /= q) w[i] = static_cast<ZModRing::value_type>(v % q);
        ideals.insert(principal(w));
    }
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::set<detail::Word>> cur(ideals.begin(), ideals.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<detail::Word> gens(cur[i].begin(), cur[i].end());
                gens.insert(gens.end(), cur[j].begin(), cur[j].end());
                if (ideals.insert(detail::additive_span(r, n, gens, budget)).second) grew = true;
            }
    }
    return {ideals.begin(), ideals.end()};
}

inline nlohmann::json to_json(const RingCodeSpace& s, const RingCode& c) {
    nlohmann::json j;
    j["exponents"] = c.exponents;
    j["words"] = codeword_count(s, c).str();
    j["dual"] = dual_code(s, c).exponents;
    j["self_dual"] = is_self_dual(s, c);
    return j;
}

}  // namespace gacodes
