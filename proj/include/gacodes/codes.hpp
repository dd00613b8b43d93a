#pragma once

// Ideals of F_qG viewed as linear codes of length |G|.
//
// A Code stores a row-reduced basis of the ideal spanned by the translates
// g*e of its generator. Weights are computed exactly by enumerating one
// representative per projective point with a Gray-code walk, so each step
// adds a single basis row to the running codeword.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detail/arith.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "galg.hpp"
#include "groups.hpp"
#include "idem.hpp"

namespace gacodes {

inline constexpr std::uint64_t kDefaultWeightBudget = 1ULL << 24;

class Code {
public:
    using Row = std::vector<SmallField::value_type>;

    Code(FieldElementVec generator, std::vector<Row> basis, std::vector<std::size_t> pivots)
        : gen_(std::move(generator)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    const FieldElementVec& generator() const { return gen_; }
    const FieldAlgebra& algebra() const { return gen_.algebra(); }
    const SmallField& field() const { return gen_.algebra().ring(); }
    const std::vector<Row>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t dimension() const { return basis_.size(); }
    std::size_t length() const { return gen_.size(); }
    bool is_zero_code() const { return basis_.empty(); }

    std::vector<FieldElementVec> basis_elements() const {
        std::vector<FieldElementVec> out;
        for (const auto& r : basis_) out.push_back(algebra().from_coeffs(r));
        return out;
    }

    /// Membership by reduction against the pivots.
    bool contains(const FieldElementVec& x) const {
        const auto& f = field();
        Row v = x.coeffs();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            auto c = v[pivots_[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (basis_[i][j]) v[j] = f.sub(v[j], f.mul(c, basis_[i][j]));
        }
        return std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; });
    }

    bool same_space(const Code& o) const { return basis_ == o.basis_; }

private:
    FieldElementVec gen_;
    std::vector<Row> basis_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
inline std::pair<std::vector<Code::Row>, std::vector<std::size_t>> rref(const SmallField& f, std::vector<Code::Row> rows) {
    std::vector<Code::Row> out;
    std::vector<std::size_t> piv;
    if (rows.empty()) return {out, piv};
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        auto inv = f.inv(rows[r][col]);
        if (inv != 1)
            for (auto& x : rows[r]) x = f.mul(x, inv);
        std::vector<std::size_t> nz;
        for (std::size_t j = col; j < n; ++j)
            if (rows[r][j]) nz.push_back(j);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            auto c = rows[i][col];
            for (auto j : nz) rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
        }
        piv.push_back(col);
        ++r;
    }
    rows.resize(r);
    return {std::move(rows), std::move(piv)};
}

}  // namespace detail

/// The ideal F_qG*x spanned by the translates g*x, for each generator x (all from one algebra).
inline Code code_from_generators(const std::vector<FieldElementVec>& gens) {
    detail::require(!gens.empty(), "code_from_generators: no generators");
    const auto& alg = gens[0].algebra();
    std::vector<Code::Row> rows;
    auto generator = alg.zero();
    for (const auto& x : gens) {
        generator += x;
        if (x.is_zero()) continue;
        for (std::uint32_t g = 0; g < alg.dimension(); ++g) rows.push_back(x.left_shift(g).coeffs());
    }
    auto [basis, piv] = detail::rref(alg.ring(), std::move(rows));
    return Code(gens.size() == 1 ? gens[0] : generator, std::move(basis), std::move(piv));
}

/// The ideal generated by e; for a central idempotent this is the two-sided ideal F_qG*e.
inline Code code_from_idempotent(const FieldElementVec& e) { return code_from_generators({e}); }

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w

    std::size_t min_weight() const {
        for (std::size_t w = 1; w < counts.size(); ++w)
            if (counts[w]) return w;
        return 0;
    }
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
    /// Nonzero weights that occur.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t w = 1; w < counts.size(); ++w)
            if (counts[w]) s.push_back(w);
        return s;
    }
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (std::size_t w = 0; w < counts.size(); ++w)
            if (counts[w]) j[std::to_string(w)] = counts[w];
        return j;
    }
};

namespace detail {

inline void check_weight_budget(const Code& c, std::uint64_t budget) {
    const std::uint64_t q = c.field().size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (total > budget / q) {
            throw BudgetExceeded("weight enumeration needs " + std::to_string(q) + "^" + std::to_string(c.dimension()) +
                                 " codewords, above the budget " + std::to_string(budget) + "; pass a larger budget explicitly");
        }
        total *= q;
    }
}

/// Calls visit(weight) once per nonzero codeword up to scalar multiples (every nonzero
/// codeword when q = 2); stops early when visit returns false.
template <class Visit>
void for_each_projective_weight(const Code& c, std::uint64_t budget, Visit&& visit) {
    check_weight_budget(c, budget);
    const auto k = c.dimension();
    const auto n = c.length();
    if (k == 0) return;
    const auto& f = c.field();
    if (f.size() == 2) {
        const std::size_t words = (n + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (c.basis()[i][j]) rows[i][j / 64] |= 1ULL << (j % 64);
        std::vector<std::uint64_t> cw(words, 0);
        const std::uint64_t steps = 1ULL << k;
        for (std::uint64_t s = 1; s < steps; ++s) {
            const auto& r = rows[std::countr_zero(s)];
            std::size_t w = 0;
            for (std::size_t i = 0; i < words; ++i) {
                cw[i] ^= r[i];
                w += static_cast<std::size_t>(std::popcount(cw[i]));
            }
            if (!visit(w)) return;
        }
        return;
    }
    // q > 2: the first nonzero message coordinate is 1; the rest follow a modular Gray code
    // in which every step adds one basis row.
    const auto q = f.size();
    std::vector<std::vector<std::size_t>> supp(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c.basis()[i][j]) supp[i].push_back(j);
    for (std::size_t lead = 0; lead < k; ++lead) {
        Code::Row cw = c.basis()[lead];
        std::size_t w = supp[lead].size();
        if (!visit(w)) return;
        std::vector<std::uint32_t> digit(k - lead - 1, 0);
        for (;;) {
            std::size_t j = 0;
            while (j < digit.size() && digit[j] == q - 1) digit[j++] = 0;
            if (j == digit.size()) break;
            ++digit[j];
            const auto& row = c.basis()[lead + 1 + j];
            for (auto pos : supp[lead + 1 + j]) {
                bool was = cw[pos] != 0;
                cw[pos] = f.add(cw[pos], row[pos]);
                bool now = cw[pos] != 0;
                w += now;
                w -= was;
            }
            if (!visit(w)) return;
        }
    }
}

}  // namespace detail

/// Exact minimum weight; 0 for the zero code. Stops once the trivial lower bound is met
/// (1 for the whole algebra, 2 for a proper ideal, which cannot contain a unit g).
inline std::size_t minimum_weight(const Code& c, std::uint64_t budget = kDefaultWeightBudget) {
    if (c.dimension() == 0) return 0;
    const std::size_t floor = c.dimension() == c.length() ? 1 : 2;
    std::size_t best = c.length() + 1;
    detail::for_each_projective_weight(c, budget, [&](std::size_t w) {
        best = std::min(best, w);
        return best > floor;
    });
    return best;
}

inline WeightDistribution weight_distribution(const Code& c, std::uint64_t budget = kDefaultWeightBudget) {
    WeightDistribution d;
    d.counts.assign(c.length() + 1, 0);
    d.counts[0] = 1;
    const std::uint64_t scale = c.field().size() - 1;
    detail::for_each_projective_weight(c, budget, [&](std::size_t w) {
        d.counts[w] += scale;
        return true;
    });
    while (d.counts.size() > 1 && d.counts.back() == 0) d.counts.pop_back();
    return d;
}

/// All nonzero codewords share one weight; vacuously true for the zero code.
inline bool is_constant_weight(const Code& c, std::uint64_t budget = kDefaultWeightBudget) {
    std::optional<std::size_t> first;
    bool constant = true;
    detail::for_each_projective_weight(c, budget, [&](std::size_t w) {
        if (!first) first = w;
        constant = *first == w;
        return constant;
    });
    return constant;
}

/// The ideal generated by pairwise orthogonal generators; its dimension is checked to be additive.
inline Code direct_sum(const std::vector<Code>& codes) {
    detail::require(!codes.empty(), "direct_sum: empty list");
    std::vector<FieldElementVec> gens;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = i + 1; j < codes.size(); ++j)
            if (!codes[i].generator().is_orthogonal(codes[j].generator()))
                throw PreconditionError("direct_sum: generators " + std::to_string(i) + " and " + std::to_string(j) +
                                        " are not orthogonal");
        gens.push_back(codes[i].generator());
    }
    auto sum = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) sum += gens[i];
    auto c = code_from_idempotent(sum);
    std::size_t total = 0;
    for (const auto& x : codes) total += x.dimension();
    detail::verify(c.dimension() == total, "direct_sum: dimension is not additive");
    return c;
}

/// True iff every vector of the given spanning set has the same weight.
inline bool visible_basis_check(const Code& c, const std::vector<FieldElementVec>& basis) {
    std::vector<Code::Row> rows;
    for (const auto& b : basis) {
        if (!c.contains(b)) throw PreconditionError("visible_basis_check: a basis vector lies outside the code");
        rows.push_back(b.coeffs());
    }
    auto [r, piv] = detail::rref(c.field(), std::move(rows));
    if (r.size() != c.dimension()) throw PreconditionError("visible_basis_check: the vectors do not span the code");
    if (basis.empty()) return true;
    const auto w = basis[0].weight();
    return std::all_of(basis.begin(), basis.end(), [&](const auto& b) { return b.weight() == w; });
}

struct ParameterRow {
    std::string label;
    FieldElementVec idempotent;
    std::size_t dimension = 0, weight = 0;
    std::size_t expected_dimension = 0, expected_weight = 0;
    bool matches() const { return dimension == expected_dimension && weight == expected_weight; }
};

/// Chain codes I_0..I_m of F_qC_{2^m}: dim 1 and 2^{i-1}, weight 2^m and 2^{m-i+1}.
inline std::vector<ParameterRow> cyclic_2m_parameters(unsigned m, const SmallField& f,
                                                      std::uint64_t budget = kDefaultWeightBudget) {
    if (f.size() % 2 == 0) throw PreconditionError("cyclic_2m_parameters: q must be odd");
    detail::require(m >= 1 && m < 20, "cyclic_2m_parameters: m out of range");
    auto a = make_abelian_algebra(AbelianGroup({1ULL << m}), f);
    auto sys = cyclic_chain_idempotents(a);
    std::vector<ParameterRow> rows;
    for (unsigned i = 0; i <= m; ++i) {
        auto code = code_from_idempotent(sys.members[i]);
        ParameterRow r{"I_" + std::to_string(i), sys.members[i], code.dimension(), minimum_weight(code, budget)};
        r.expected_dimension = i == 0 ? 1 : (1ULL << (i - 1));
        r.expected_weight = i == 0 ? (1ULL << m) : (1ULL << (m - i + 1));
        rows.push_back(std::move(r));
    }
    return rows;
}

/// The basis {a^j e : 0 <= j < dim} of a chain code of a cyclic group.
inline std::vector<FieldElementVec> translate_basis(const FieldElementVec& e, std::uint32_t a, std::size_t count) {
    std::vector<FieldElementVec> out;
    const auto& t = e.algebra().group();
    for (std::size_t j = 0; j < count; ++j) out.push_back(e.left_shift(t.power(a, j)));
    return out;
}

/// Predicted minimum weight of I_{i_1} + ... + I_{i_t} in F_qC_{p^n} for the chain codes:
/// p^{n-t} when the indices are exactly {0..t}, else 2p^{n-i_t} with i_t the largest index.
struct CyclicSumPrediction {
    std::uint64_t weight = 0;
    bool prefix = false;
    std::string rule;
};

inline CyclicSumPrediction cyclic_pn_sum_weight(std::uint64_t p, unsigned n, std::vector<unsigned> indices) {
    detail::require(!indices.empty(), "cyclic_pn_sum_weight: empty index set");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    detail::require(indices.back() <= n, "cyclic_pn_sum_weight: index above n");
    const unsigned top = indices.back();
    CyclicSumPrediction r;
    r.prefix = indices.size() == top + 1 && indices.front() == 0;
    if (r.prefix) {
        r.weight = detail::checked_pow(p, n - top);
        r.rule = indices.size() == 2 ? "iii" : (indices.size() == 1 ? "single" : "iv");
    } else {
        r.weight = 2 * detail::checked_pow(p, n - top);
        if (indices.size() == 1) r.rule = "single";
        else if (indices.size() == 2) r.rule = indices.front() == 0 ? "ii" : "i";
        else r.rule = "v";
    }
    return r;
}

struct MeloSum {
    std::size_t dimension = 0, weight = 0;
    std::string first, second;
};

/// Direction subgroups of C_p x C_p: 0 -> <a>, 1..p-1 -> <ab^i>, p -> <b>.
inline Subgroup direction_subgroup(const AbelianAlgebra& a, std::uint64_t p, std::uint64_t dir) {
    detail::require(dir <= p, "direction index above p");
    const auto& t = a.table();
    const auto ga = a.group.generator(0), gb = a.group.generator(1);
    std::uint32_t g = dir == 0 ? ga : dir == p ? gb : t.mul(ga, t.power(gb, dir));
    return generate_subgroup(t, {g});
}

/// I = F_qG e_H + F_qG e_K in F_q(C_p x C_p) for two distinct direction subgroups H, K.
inline MeloSum melo_two_sylow_sum(std::uint64_t p, std::uint64_t q, std::uint64_t dir1 = 0, std::uint64_t dir2 = ~0ULL,
                                  std::uint64_t budget = kDefaultWeightBudget) {
    if (dir2 == ~0ULL) dir2 = p;
    if (!detail::is_prime(p)) throw PreconditionError("melo_two_sylow_sum: p must be prime");
    if (q % p == 0 || order_mod(q, p) != p - 1)
        throw PreconditionError("melo_two_sylow_sum: q does not generate U(Z_" + std::to_string(p) + ")");
    if (dir1 == dir2) throw PreconditionError("melo_two_sylow_sum: the two direction subgroups must differ");
    auto a = make_abelian_algebra(AbelianGroup({p, p}), SmallField::of_order(q));
    auto h = direction_subgroup(a, p, dir1), k = direction_subgroup(a, p, dir2);
    auto c = direct_sum({code_from_idempotent(e_H(a, h)), code_from_idempotent(e_H(a, k))});
    return {c.dimension(), minimum_weight(c, budget), subgroup_name(a.table(), h), subgroup_name(a.table(), k)};
}

/// True iff every codeword is constant on the cosets gH (checked on a basis, which suffices).
inline bool is_coset_repetition(const Code& c, const Subgroup& h) {
    const auto& t = c.algebra().group();
    for (const auto& row : c.basis())
        for (std::uint32_t g = 0; g < t.order; ++g)
            for (auto x : h.elements)
                if (row[t.mul(g, x)] != row[g]) return false;
    return true;
}

/// A nontrivial H with e*H^ = e for a primitive e, preferring the largest; none for essential e.
inline std::optional<Subgroup> repetition_subgroup(const AbelianAlgebra& a, const FieldElementVec& e) {
    std::optional<Subgroup> best;
    for (const auto& h : all_subgroups(a.group)) {
        if (h.is_trivial() || (best && best->order() >= h.order())) continue;
        if (e * a.algebra->hat(h) == e) best = h;
    }
    return best;
}

}  // namespace gacodes
