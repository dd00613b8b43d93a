#pragma once

// Dihedral groups D_n = <a, b | a^n = b^2 = 1, bab = a^{-1}>, simple-component
// counting for F_qD_n, the central idempotents of the minimal-component case,
// and the audit of their printed dimension/weight tables.
//
// Element a^i b^j has index i + n*j.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
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

class DihedralGroup {
public:
    explicit DihedralGroup(std::uint32_t n) : n_(n) {
        detail::require(n >= 1, "D_n needs n >= 1");
        if (2ULL * n > kDefaultGroupBudget) throw BudgetExceeded("D_n: 2n exceeds the group budget");
        auto t = std::make_shared<GroupTable>();
        const std::uint32_t order = 2 * n;
        t->order = order;
        t->abelian = n <= 2;
        t->mul_table.resize(std::size_t(order) * order);
        t->inverse.resize(order);
        t->coords.resize(order);
        t->labels.resize(order);
        for (std::uint32_t x = 0; x < order; ++x) {
            const auto i = x % n, j = x / n;
            t->coords[x] = {i, j};
            std::string l = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
            if (j) l += "b";
            t->labels[x] = l.empty() ? "1" : l;
            for (std::uint32_t y = 0; y < order; ++y) {
                const auto k = y % n, l2 = y / n;
                const auto e = j ? (i + n - k) % n : (i + k) % n;
                t->mul_table[std::size_t(x) * order + y] = e + n * ((j + l2) % 2);
            }
        }
        for (std::uint32_t x = 0; x < order; ++x)
            for (std::uint32_t y = 0; y < order; ++y)
                if (t->mul_table[std::size_t(x) * order + y] == 0) t->inverse[x] = y;
        t->generators = n > 1 ? std::vector<std::uint32_t>{1, n} : std::vector<std::uint32_t>{n};
        table_ = std::move(t);
    }

    std::uint32_t n() const { return n_; }
    std::uint32_t order() const { return 2 * n_; }
    std::uint32_t a() const { return n_ > 1 ? 1 : 0; }
    std::uint32_t b() const { return n_; }
    std::uint32_t element(std::uint32_t i, std::uint32_t j) const { return i % n_ + n_ * (j % 2); }
    std::shared_ptr<const GroupTable> table() const { return table_; }
    std::string name() const { return "D" + std::to_string(n_); }

private:
    std::uint32_t n_;
    std::shared_ptr<const GroupTable> table_;
};

/// Conjugacy classes by brute-force conjugation, each sorted, listed by smallest element.
inline std::vector<std::vector<std::uint32_t>> conjugacy_classes(const GroupTable& t) {
    if (t.order > kDefaultGroupBudget) throw BudgetExceeded("conjugacy_classes: |G| exceeds the group budget");
    std::vector<char> seen(t.order, 0);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t x = 0; x < t.order; ++x) {
        if (seen[x]) continue;
        std::set<std::uint32_t> cls;
        for (std::uint32_t g = 0; g < t.order; ++g) cls.insert(t.mul(t.mul(g, x), t.inv(g)));
        for (auto y : cls) seen[y] = 1;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

struct ComponentCounts {
    std::size_t over_fq = 0, over_q = 0;
    bool minimal() const { return over_fq == over_q; }
};

/// Simple components of F_qG and QG as orbits of conjugacy classes under x -> x^q and
/// under x -> x^r for every r prime to |G| respectively.
inline ComponentCounts simple_component_counts(const GroupTable& t, std::uint64_t q) {
    if (std::gcd<std::uint64_t>(q, t.order) != 1) throw PreconditionError("simple_component_counts: gcd(q, |G|) != 1");
    auto classes = conjugacy_classes(t);
    std::vector<std::size_t> cls_of(t.order);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto x : classes[c]) cls_of[x] = c;
    auto count = [&](const std::vector<std::uint64_t>& exps) {
        std::vector<std::size_t> parent(classes.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto r : exps) {
                auto a = find(c), b = find(cls_of[t.power(classes[c][0], r)]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::size_t roots = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) roots += find(c) == c;
        return roots;
    };
    std::vector<std::uint64_t> units;
    for (std::uint64_t r = 1; r < t.order; ++r)
        if (std::gcd<std::uint64_t>(r, t.order) == 1) units.push_back(r);
    if (units.empty()) units.push_back(1);
    return {count({q % t.order}), count(units)};
}

/// The first of the conditions (i)-(xi) under which F_qD_n has as many simple components
/// as QD_n, as a roman numeral; nullopt when none holds.
inline std::optional<std::string> dihedral_condition(std::uint64_t n, std::uint64_t q) {
    if (std::gcd(q, 2 * n) != 1) throw PreconditionError("dihedral_condition: gcd(q, 2n) != 1");
    using detail::prime_power;
    auto odd_prime_power = [](std::uint64_t x) {
        auto [p, m] = prime_power(x);
        return p > 2 ? p : 0;
    };
    auto generates = [&](std::uint64_t x, std::uint64_t mod) { return order_mod(x % mod, mod) == euler_phi(mod); };
    auto half = [&](std::uint64_t x, std::uint64_t mod) { return 2 * order_mod(x % mod, mod) == euler_phi(mod); };
    if (n == 2 || n == 4) return "i";
    if (auto [p, m] = prime_power(n); p == 2 && m >= 3 && (q % 8 == 3 || q % 8 == 5)) return "ii";
    if (auto p = odd_prime_power(n)) {
        if (generates(q, n)) return "iii";
        if (p % 4 == 3 && half(q, n)) return "iv";
    }
    if (n % 2 == 0) {
        if (auto p = odd_prime_power(n / 2)) {
            if (generates(q, n / 2)) return "v";
            if (p % 4 == 3 && half(q, n / 2)) return "vi";
        }
    }
    if (n % 4 == 0) {
        const auto pm = n / 4;
        if (odd_prime_power(pm)) {
            const auto ph = euler_phi(pm);
            if (ph % 4 == 0 && generates(q, pm)) return "vii";
            if (ph % 4 != 0 && q % 4 == 1 && generates(q, pm)) return "viii";
            if (ph % 4 != 0 && q % 4 == 3 && half(q, pm)) return "ix";
        }
    }
    auto two_primes = [&](std::uint64_t x) {
        auto f = detail::factorize(x);
        if (f.size() != 2 || f[0].first == 2) return false;
        const auto a = detail::checked_pow(f[0].first, f[0].second), b = detail::checked_pow(f[1].first, f[1].second);
        if (std::gcd(euler_phi(a), euler_phi(b)) != 2) return false;
        const auto target = euler_phi(x) / 2;
        return order_mod(q % x, x) == target || order_mod((x - q % x) % x, x) == target;
    };
    if (two_primes(n)) return "x";
    if (n % 2 == 0 && two_primes(n / 2)) return "xi";
    return std::nullopt;
}

struct DutraRow {
    std::string label;
    std::vector<std::pair<std::uint64_t, unsigned>> chain;  // (p, j) per Sylow of <a>
    std::uint64_t character_order = 1;                       // d = prod p^j
    int b_part = 0;                                          // +1 for b^, -1 for 1-b^, 0 when not split
    std::size_t printed_dimension = 0, printed_weight = 0;
    std::string note;                                        // suspected misprint in the printed cell
};

struct DutraSystem {
    DihedralGroup group;
    SmallField field;
    std::shared_ptr<const FieldAlgebra> algebra;
    std::string condition;
    std::string table;  // which printed table the rows are compared with
    FieldIdempotents system;
    std::vector<DutraRow> rows;
};

/// Central idempotents of F_qD_n in the minimal-component case: products over the Sylow
/// subgroups of <a> of chain differences, with the components of character order <= 2
/// split by b^ and 1 - b^.
inline DutraSystem dutra_idempotents(std::uint32_t n, std::uint64_t q) {
    detail::require(n >= 2, "dutra_idempotents: n must be at least 2");
    auto cond = dihedral_condition(n, q);
    if (!cond) throw PreconditionError("dutra_idempotents: (n, q) = (" + std::to_string(n) + ", " + std::to_string(q) +
                                       ") satisfies none of the minimal-component conditions");
    DihedralGroup d(n);
    auto f = SmallField::of_order(q);
    auto alg = FieldAlgebra::make(d.table(), f);
    const auto& t = *d.table();
    DutraSystem out{d, f, alg, *cond, {}, {}, {}};
    const auto& c = *cond;
    out.table = (c == "i" || c == "ii") ? "2^m" : (c == "iii" || c == "iv") ? "p^m"
              : (c == "x") ? "p1^m1 p2^m2" : (c == "xi") ? "2 p1^m1 p2^m2" : "2^m1 p^m2";
    out.system.algebra = alg;

    const auto fac = detail::factorize(n);
    auto cyc = [&](std::uint64_t order) {  // hat of the subgroup of <a> with the given order
        return alg->hat(generate_subgroup(t, {d.element(static_cast<std::uint32_t>(n / order), 0)}));
    };
    auto chain_factor = [&](std::uint64_t p, unsigned m, unsigned j) {
        const auto top = detail::checked_pow(p, m);
        if (j == 0) return cyc(top);
        return cyc(top / detail::checked_pow(p, j)) - cyc(top / detail::checked_pow(p, j - 1));
    };
    const auto bh = alg->hat(generate_subgroup(t, {d.b()}));
    const auto one = alg->one();
    // the C_2 Sylow of n = 2 p1^m1 p2^m2 sits in its own column and does not enter the printed dimension
    const bool separate_two = out.table == "2 p1^m1 p2^m2";

    std::vector<std::vector<unsigned>> tuples{{}};
    for (auto [p, m] : fac) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& tu : tuples)
            for (unsigned j = 0; j <= m; ++j) {
                auto x = tu;
                x.push_back(j);
                next.push_back(std::move(x));
            }
        tuples = std::move(next);
    }
    auto dval = [&](const std::vector<unsigned>& tu) {
        std::uint64_t v = 1;
        for (std::size_t s = 0; s < fac.size(); ++s) v *= detail::checked_pow(fac[s].first, tu[s]);
        return v;
    };
    std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& x, const auto& y) { return dval(x) < dval(y); });

    for (const auto& tu : tuples) {
        auto e = one;
        DutraRow row;
        std::size_t nontrivial = 0;
        std::uint64_t wprod = 1;
        std::string name;
        std::vector<std::uint64_t> printed_factors;
        for (std::size_t s = 0; s < fac.size(); ++s) {
            const auto [p, m] = fac[s];
            const auto j = tu[s];
            e *= chain_factor(p, m, j);
            row.chain.emplace_back(p, j);
            if (j > 0) {
                ++nontrivial;
                if (!(separate_two && p == 2)) printed_factors.push_back(2 * euler_phi(detail::checked_pow(p, j)));
            }
            wprod *= detail::checked_pow(p, m - j);
            if (!name.empty()) name += "*";
            name += "C" + std::to_string(detail::checked_pow(p, m)) + "[" + std::to_string(j) + "]";
        }
        row.character_order = dval(tu);
        if (row.character_order <= 2) {
            for (int sign : {1, -1}) {
                DutraRow r = row;
                r.b_part = sign;
                r.label = (sign > 0 ? "b^*" : "(1-b^)*") + name;
                r.printed_dimension = 1;
                r.printed_weight = 2 * n;
                out.system.add(sign > 0 ? bh * e : (one - bh) * e, {Provenance::Construction, r.label, {}, {}});
                out.rows.push_back(std::move(r));
            }
            continue;
        }
        row.label = name;
        row.printed_weight = 2 * (std::size_t(1) << (nontrivial - 1)) * wprod;
        if (printed_factors.empty()) {
            row.printed_dimension = 2;  // only the separate C_2 column is nontrivial: not reachable for d > 2
        } else if (printed_factors.size() == 1) {
            row.printed_dimension = printed_factors[0];
        } else {
            row.printed_dimension = 1;
            for (auto v : printed_factors) row.printed_dimension *= v;
        }
        if (out.table != "2^m" && out.table != "p^m") {
            const auto first = separate_two ? 1u : 0u;
            if (fac.size() > first && tu[first] > 0)
                row.note = "dimension cell prints 2phi(p1^j) in a row indexed by i; evaluated with j = i";
        }
        out.system.add(std::move(e), {Provenance::Construction, row.label, {}, {}});
        out.rows.push_back(std::move(row));
    }
    for (const auto& e : out.system.members)
        detail::verify(e.is_central(), "dihedral idempotent is not central");
    out.system.validate();
    return out;
}

struct DutraTableRow {
    DutraRow row;
    std::size_t dimension = 0, weight = 0;
    std::size_t expected_dimension = 0;  // 1 for split rows, 2 phi(d) otherwise
    bool matches_printed() const { return dimension == row.printed_dimension && weight == row.printed_weight; }
};

struct DutraTable {
    DutraSystem system;
    std::vector<DutraTableRow> rows;
    std::vector<std::string> findings;
    ComponentCounts counts;
};

/// Computes (dim, weight) of every code F_qD_n e from scratch and diffs against the printed formulas.
/// Disagreements become findings; exactly stated invariants (dimension 2 phi(d), total 2n,
/// component count) throw VerificationError.
inline DutraTable dutra_code_table(std::uint32_t n, std::uint64_t q, std::uint64_t budget = kDefaultWeightBudget) {
    DutraTable out{dutra_idempotents(n, q), {}, {}, {}};
    out.counts = simple_component_counts(*out.system.group.table(), q);
    detail::verify(out.counts.minimal(), "component counts differ although a minimality condition holds");
    detail::verify(out.counts.over_fq == out.system.system.size(), "idempotent count differs from the q-class census");
    std::size_t total = 0;
    for (std::size_t i = 0; i < out.system.rows.size(); ++i) {
        DutraTableRow r{out.system.rows[i]};
        auto code = code_from_idempotent(out.system.system.members[i]);
        r.dimension = code.dimension();
        r.weight = minimum_weight(code, budget);
        r.expected_dimension = r.row.b_part ? 1 : 2 * euler_phi(r.row.character_order);
        detail::verify(r.dimension == r.expected_dimension, "dimension of " + r.row.label + " is not 2 phi(d)");
        total += r.dimension;
        if (r.dimension != r.row.printed_dimension)
            out.findings.push_back(r.row.label + ": printed dimension " + std::to_string(r.row.printed_dimension) +
                                   ", computed " + std::to_string(r.dimension));
        if (r.weight != r.row.printed_weight)
            out.findings.push_back(r.row.label + ": printed weight " + std::to_string(r.row.printed_weight) + ", computed " +
                                   std::to_string(r.weight));
        if (!r.row.note.empty()) out.findings.push_back(r.row.label + ": " + r.row.note);
        out.rows.push_back(std::move(r));
    }
    detail::verify(total == 2ULL * n, "code dimensions do not sum to 2n");
    return out;
}

}  // namespace gacodes
