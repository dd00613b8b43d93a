#pragma once

// Finite groups as multiplication tables, finite abelian groups in primary
// form, subgroups, co-cyclic machinery, automorphisms and characters.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "detail/arith.hpp"
#include "error.hpp"
#include "ffield.hpp"

namespace gacodes {

/// Default cap on |G| for subgroup enumeration.
inline constexpr std::uint64_t kDefaultGroupBudget = 10000;
/// Default cap on candidate generator-image tuples when enumerating Aut(G).
inline constexpr std::uint64_t kDefaultAutBudget = 1000000;

/// Elements are indices 0..order-1 with 0 the identity.
struct GroupTable {
    std::uint32_t order = 0;
    bool abelian = true;
    std::vector<std::uint32_t> mul_table;  // order*order; empty for large abelian groups
    std::vector<std::uint32_t> radix;      // factor orders used when mul_table is empty
    std::vector<std::uint32_t> inverse;
    std::vector<std::uint32_t> generators;
    std::vector<std::vector<std::uint32_t>> coords;  // exponent vector of each element
    std::vector<std::string> labels;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mul_table.empty()) return mul_table[std::size_t(a) * order + b];
        std::uint32_t r = 0, scale = 1;
        for (std::size_t i = radix.size(); i-- > 0;) {
            const auto n = radix[i];
            r += ((a % n + b % n) % n) * scale;
            a /= n;
            b /= n;
            scale *= n;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }
    std::uint32_t power(std::uint32_t a, std::uint64_t k) const {
        std::uint32_t r = 0;
        for (std::uint64_t i = 0; i < k % element_order(a); ++i) r = mul(r, a);
        return r;
    }
    std::uint64_t element_order(std::uint32_t a) const {
        std::uint64_t k = 1;
        for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
        return k;
    }
};

/// Subgroup of a table group: sorted element indices plus a small generating list.
struct Subgroup {
    std::vector<std::uint32_t> elements;
    std::vector<std::uint32_t> generators;

    std::size_t order() const { return elements.size(); }
    bool contains(std::uint32_t g) const { return std::binary_search(elements.begin(), elements.end(), g); }
    bool is_trivial() const { return elements.size() == 1; }
    bool subset_of(const Subgroup& o) const {
        return std::includes(o.elements.begin(), o.elements.end(), elements.begin(), elements.end());
    }
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
    friend bool operator<(const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    }
};

namespace detail {

inline std::vector<std::uint32_t> closure(const GroupTable& t, const std::vector<std::uint32_t>& gens) {
    std::vector<char> seen(t.order, 0);
    std::vector<std::uint32_t> out{0}, frontier{0};
    seen[0] = 1;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto x : frontier)
            for (auto g : gens) {
                auto y = t.mul(x, g);
                if (!seen[y]) {
                    seen[y] = 1;
                    out.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Least k >= 1 with g^k in H (the order of gH in G/H, for normal H).
inline std::uint64_t order_modulo(const GroupTable& t, std::uint32_t g, const Subgroup& h) {
    std::uint64_t k = 1;
    for (std::uint32_t x = g; !h.contains(x); x = t.mul(x, g)) ++k;
    return k;
}

/// Irredundant generating list: each step takes the element of largest order modulo
/// the span so far, preferring fewer nonzero coordinates, then smaller exponent vectors.
inline std::vector<std::uint32_t> pick_generators(const GroupTable& t, const std::vector<std::uint32_t>& elems) {
    auto nonzero = [&](std::uint32_t e) { return std::count_if(t.coords[e].begin(), t.coords[e].end(), [](auto c) { return c != 0; }); };
    std::vector<std::uint32_t> gens;
    Subgroup span{{0}, {}};
    while (span.order() < elems.size()) {
        std::uint32_t best = 0;
        std::uint64_t best_ord = 0;
        for (auto e : elems) {
            if (span.contains(e)) continue;
            auto o = order_modulo(t, e, span);
            bool better = o > best_ord;
            if (o == best_ord) {
                auto ne = nonzero(e), nb = nonzero(best);
                better = ne != nb ? ne < nb : t.coords[e] < t.coords[best];
            }
            if (better) best = e, best_ord = o;
        }
        gens.push_back(best);
        span.elements = closure(t, gens);
    }
    // display order: lexicographically larger exponent vectors first (a-part before b-part)
    std::sort(gens.begin(), gens.end(), [&](auto x, auto y) { return t.coords[x] > t.coords[y]; });
    return gens;
}

}  // namespace detail

inline Subgroup generate_subgroup(const GroupTable& t, const std::vector<std::uint32_t>& gens) {
    Subgroup s;
    s.elements = detail::closure(t, gens);
    s.generators = detail::pick_generators(t, s.elements);
    return s;
}

inline Subgroup whole_group(const GroupTable& t) {
    Subgroup s;
    s.elements.resize(t.order);
    std::iota(s.elements.begin(), s.elements.end(), 0u);
    s.generators = detail::pick_generators(t, s.elements);
    return s;
}

inline Subgroup trivial_subgroup() { return Subgroup{{0}, {}}; }

/// "<a^3,b>" style rendering; the trivial subgroup prints as "{1}".
inline std::string subgroup_name(const GroupTable& t, const Subgroup& h) {
    if (h.is_trivial()) return "{1}";
    std::string s = "<";
    for (std::size_t i = 0; i < h.generators.size(); ++i) s += (i ? "," : "") + t.labels[h.generators[i]];
    return s + ">";
}

/// Finite abelian group C_{n1} x ... x C_{nk}, normalised to prime-power factors
/// sorted by prime ascending and then by exponent descending. Element index is
/// mixed radix over the factors with the last factor varying fastest.
class AbelianGroup {
public:
    AbelianGroup() : AbelianGroup(std::vector<std::uint64_t>{}) {}
    explicit AbelianGroup(const std::vector<std::uint64_t>& orders) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;  // (prime, prime power)
        for (auto n : orders) {
            if (n < 2) throw ParseError("cyclic factor orders must be at least 2");
            for (auto [p, e] : detail::factorize(n)) parts.emplace_back(p, detail::checked_pow(p, e));
        }
        std::sort(parts.begin(), parts.end(), [](auto& x, auto& y) { return x.first != y.first ? x.first < y.first : x.second > y.second; });
        order_ = 1;
        exponent_ = 1;
        for (auto [p, q] : parts) {
            factors_.push_back(q);
            if (order_ > (1ULL << 32) / q) throw PreconditionError("group order exceeds 32 bits");
            order_ *= q;
            exponent_ = std::lcm(exponent_, q);
        }
    }

    /// Parses "C9xC3" (case-insensitive, 'x' separated); "C1" alone is the trivial group.
    static AbelianGroup parse(const std::string& text) {
        std::vector<std::uint64_t> orders;
        std::string s;
        for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (s.empty()) throw ParseError("empty group literal");
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find('x', pos);
            auto tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (tok.size() < 2 || tok[0] != 'c' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit) || tok.size() > 11)
                throw ParseError("bad group factor '" + tok + "' in '" + text + "' (expected e.g. C9xC3)");
            auto n = std::stoull(tok.substr(1));
            if (n == 0) throw ParseError("cyclic factor order must be positive in '" + text + "'");
            if (n >= 2) orders.push_back(n);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return AbelianGroup(orders);
    }

    const std::vector<std::uint64_t>& factor_orders() const { return factors_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }
    std::size_t rank() const { return factors_.size(); }
    bool is_cyclic() const {
        std::set<std::uint64_t> primes;
        for (auto n : factors_) primes.insert(detail::prime_power(n).first);
        return primes.size() == factors_.size();
    }
    /// The prime p when G is a nontrivial p-group, else 0.
    std::uint64_t p_group_prime() const {
        if (factors_.empty()) return 0;
        auto p = detail::prime_power(factors_.front()).first;
        for (auto n : factors_)
            if (detail::prime_power(n).first != p) return 0;
        return p;
    }

    std::string name() const {
        if (factors_.empty()) return "C1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "xC" : "C") + std::to_string(factors_[i]);
        return s;
    }

    std::vector<std::uint64_t> exponents(std::uint64_t index) const {
        std::vector<std::uint64_t> e(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            e[i] = index % factors_[i];
            index /= factors_[i];
        }
        return e;
    }
    std::uint64_t index(const std::vector<std::uint64_t>& e) const {
        detail::require(e.size() == factors_.size(), "exponent vector length mismatch");
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + e[i] % factors_[i];
        return idx;
    }
    /// Canonical generator of the i-th cyclic factor.
    std::uint32_t generator(std::size_t i) const {
        std::vector<std::uint64_t> e(factors_.size(), 0);
        e[i] = 1;
        return static_cast<std::uint32_t>(index(e));
    }

    /// Multiplication table (computed arithmetically above 2048 elements). Cached.
    std::shared_ptr<const GroupTable> table() const {
        if (!table_) table_ = build_table();
        return table_;
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

private:
    std::shared_ptr<const GroupTable> build_table() const {
        auto t = std::make_shared<GroupTable>();
        const auto n = static_cast<std::uint32_t>(order_);
        t->order = n;
        for (auto f : factors_) t->radix.push_back(static_cast<std::uint32_t>(f));
        t->coords.resize(n);
        t->labels.resize(n);
        t->inverse.resize(n);
        for (std::uint32_t x = 0; x < n; ++x) {
            auto e = exponents(x);
            t->coords[x].assign(e.begin(), e.end());
            std::vector<std::uint64_t> ie(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ie[i] = (factors_[i] - e[i]) % factors_[i];
            t->inverse[x] = static_cast<std::uint32_t>(index(ie));
            std::string label;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                label += letter(i);
                if (e[i] > 1) label += "^" + std::to_string(e[i]);
            }
            t->labels[x] = label.empty() ? "1" : label;
        }
        for (std::size_t i = 0; i < factors_.size(); ++i) t->generators.push_back(generator(i));
        if (n <= 2048) {
            std::vector<std::uint32_t> m(std::size_t(n) * n);
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b) m[std::size_t(a) * n + b] = t->mul(a, b);
            t->mul_table = std::move(m);
        }
        return t;
    }
    static std::string letter(std::size_t i) {
        if (i < 26) return std::string(1, static_cast<char>('a' + i));
        return "g" + std::to_string(i);
    }

    std::vector<std::uint64_t> factors_;
    std::uint64_t order_ = 1, exponent_ = 1;
    mutable std::shared_ptr<const GroupTable> table_;
};

inline std::uint64_t euler_phi(std::uint64_t n) {
    detail::require(n >= 1, "euler_phi: n must be positive");
    std::uint64_t r = n;
    for (auto [p, e] : detail::factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
    detail::require(n >= 1, "divisor_count: n must be positive");
    std::uint64_t r = 1;
    for (auto [p, e] : detail::factorize(n)) r *= e + 1;
    return r;
}

/// Every subgroup of K (itself a subgroup of an abelian table group), sorted by
/// (order, element list). Subgroups are grown by joining cyclic subgroups and
/// deduplicated by element set.
inline std::vector<Subgroup> subgroups_within(const GroupTable& t, const Subgroup& k) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> cyclic;
    for (auto x : k.elements) {
        auto c = detail::closure(t, {x});
        if (seen.insert(c).second) cyclic.push_back(c);
    }
    std::vector<std::vector<std::uint32_t>> queue(seen.begin(), seen.end());
    std::vector<char> mark(t.order, 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& c : cyclic) {
            if (std::includes(queue[qi].begin(), queue[qi].end(), c.begin(), c.end())) continue;
            // H<g> as the set of products h*y
            std::vector<std::uint32_t> joined;
            for (auto h : queue[qi])
                for (auto y : c) {
                    auto z = t.mul(h, y);
                    if (!mark[z]) {
                        mark[z] = 1;
                        joined.push_back(z);
                    }
                }
            for (auto z : joined) mark[z] = 0;
            std::sort(joined.begin(), joined.end());
            if (seen.insert(joined).second) queue.push_back(std::move(joined));
        }
    }
    std::vector<Subgroup> out;
    for (const auto& s : seen) out.push_back(Subgroup{s, detail::pick_generators(t, s)});
    std::sort(out.begin(), out.end());
    return out;
}

/// Every subgroup exactly once, sorted by (order, element list); includes {1} and G.
inline std::vector<Subgroup> all_subgroups(const AbelianGroup& g, std::uint64_t budget = kDefaultGroupBudget) {
    if (g.order() > budget)
        throw BudgetExceeded("all_subgroups: |G| = " + std::to_string(g.order()) + " exceeds budget " + std::to_string(budget));
    auto t = g.table();
    return subgroups_within(*t, whole_group(*t));
}

/// True when G/H is cyclic, witnessed by an element whose coset has order [G:H].
inline bool quotient_is_cyclic(const GroupTable& t, const Subgroup& within, const Subgroup& h) {
    const auto index = within.order() / h.order();
    for (auto x : within.elements)
        if (detail::order_modulo(t, x, h) == index) return true;
    return false;
}

/// The proper subgroups H of K with K/H cyclic.
inline std::vector<Subgroup> cocyclic_within(const GroupTable& t, const Subgroup& k) {
    std::vector<Subgroup> out;
    for (auto& h : subgroups_within(t, k))
        if (h.order() < k.order() && quotient_is_cyclic(t, k, h)) out.push_back(std::move(h));
    return out;
}

/// The proper subgroups H with G/H cyclic.
inline std::vector<Subgroup> cocyclic_subgroups(const AbelianGroup& g, std::uint64_t budget = kDefaultGroupBudget) {
    if (g.order() > budget)
        throw BudgetExceeded("cocyclic_subgroups: |G| = " + std::to_string(g.order()) + " exceeds budget " + std::to_string(budget));
    auto t = g.table();
    return cocyclic_within(*t, whole_group(*t));
}

/// For H co-cyclic in the p-group K: the unique H# with H < H# <= K and [H#:H] = p.
inline Subgroup sharp_within(const GroupTable& t, const Subgroup& k, const Subgroup& h) {
    detail::require(h.subset_of(k) && h.order() < k.order(), "sharp: H must be a proper subgroup of the ambient group");
    const auto index = k.order() / h.order();
    const auto p = detail::prime_power(index).first;
    detail::require(p != 0, "sharp: ambient group is not a p-group over H");
    for (auto x : k.elements) {
        if (detail::order_modulo(t, x, h) != index) continue;
        auto y = t.power(x, index / p);
        auto gens = h.generators;
        gens.push_back(y);
        return generate_subgroup(t, gens);
    }
    throw PreconditionError("sharp: H is not co-cyclic in the ambient group");
}

inline Subgroup sharp(const AbelianGroup& g, const Subgroup& h) {
    if (g.p_group_prime() == 0) throw PreconditionError("sharp: G = " + g.name() + " is not a p-group");
    if (h.order() == g.order()) throw PreconditionError("sharp: H = G has no sharp");
    auto t = g.table();
    return sharp_within(*t, whole_group(*t), h);
}

/// Sylow p-subgroup of an abelian group: elements of p-power order.
inline Subgroup sylow_subgroup(const GroupTable& t, std::uint64_t p) {
    std::vector<std::uint32_t> elems;
    for (std::uint32_t x = 0; x < t.order; ++x) {
        auto o = t.element_order(x);
        while (o % p == 0) o /= p;
        if (o == 1) elems.push_back(x);
    }
    return Subgroup{elems, detail::pick_generators(t, elems)};
}

inline Subgroup intersect(const GroupTable& t, const Subgroup& a, const Subgroup& b) {
    std::vector<std::uint32_t> e;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(), std::back_inserter(e));
    return Subgroup{e, detail::pick_generators(t, e)};
}

/// An automorphism stored as images of the canonical generators and as a permutation of element indices.
struct Automorphism {
    std::vector<std::uint32_t> images;
    std::vector<std::uint32_t> perm;

    std::uint32_t operator()(std::uint32_t x) const { return perm[x]; }
    Subgroup apply(const GroupTable& t, const Subgroup& h) const {
        std::vector<std::uint32_t> e;
        for (auto x : h.elements) e.push_back(perm[x]);
        std::sort(e.begin(), e.end());
        return Subgroup{e, detail::pick_generators(t, e)};
    }
    friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.perm == b.perm; }
};

inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
    // (f o g)(x) = f(g(x))
    Automorphism r;
    r.perm.resize(g.perm.size());
    for (std::size_t x = 0; x < g.perm.size(); ++x) r.perm[x] = f.perm[g.perm[x]];
    for (auto im : g.images) r.images.push_back(f.perm[im]);
    return r;
}

/// All of Aut(G) by brute force over generator images whose orders divide the factor orders.
inline std::vector<Automorphism> automorphisms(const AbelianGroup& g, std::uint64_t budget = kDefaultAutBudget) {
    if (g.order() > kDefaultGroupBudget) throw BudgetExceeded("automorphisms: |G| exceeds the group budget");
    auto t = g.table();
    const auto& f = g.factor_orders();
    std::vector<std::vector<std::uint32_t>> choices(f.size());
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::uint32_t x = 0; x < t->order; ++x)
            if (f[i] % t->element_order(x) == 0) choices[i].push_back(x);
        candidates *= choices[i].size();
        if (candidates > budget)
            throw BudgetExceeded("automorphisms: more than " + std::to_string(budget) + " candidate generator images");
    }
    std::vector<Automorphism> out;
    std::vector<std::size_t> pick(f.size(), 0);
    std::vector<char> hit(t->order);
    for (;;) {
        Automorphism a;
        for (std::size_t i = 0; i < f.size(); ++i) a.images.push_back(choices[i][pick[i]]);
        // x = sum e_i g_i  ->  sum e_i img_i; powers of each image are tabulated once
        std::vector<std::vector<std::uint32_t>> pw(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            pw[i].resize(f[i]);
            std::uint32_t y = 0;
            for (std::uint64_t e = 0; e < f[i]; ++e) {
                pw[i][e] = y;
                y = t->mul(y, a.images[i]);
            }
        }
        a.perm.resize(t->order);
        std::fill(hit.begin(), hit.end(), 0);
        bool bijective = true;
        for (std::uint32_t x = 0; x < t->order && bijective; ++x) {
            std::uint32_t y = 0;
            for (std::size_t i = 0; i < f.size(); ++i) y = t->mul(y, pw[i][t->coords[x][i]]);
            a.perm[x] = y;
            if (hit[y]) bijective = false;
            hit[y] = 1;
        }
        if (bijective) out.push_back(std::move(a));
        std::size_t i = 0;
        while (i < f.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == f.size()) break;
    }
    return out;
}

/// chi_v(g) = zeta^{sum v_i g_i (exp/n_i)}, one row per v in the group's own index order.
inline std::vector<std::vector<FieldElement>> characters(const AbelianGroup& g, const Field& f) {
    const auto e = g.exponent();
    const auto zeta = primitive_root_of_unity(f, e);
    std::vector<FieldElement> zp{f.one()};
    for (std::uint64_t k = 1; k < e; ++k) zp.push_back(zp.back() * zeta);
    const auto n = g.order();
    const auto& fo = g.factor_orders();
    std::vector<std::vector<FieldElement>> rows;
    for (std::uint64_t v = 0; v < n; ++v) {
        auto vv = g.exponents(v);
        std::vector<FieldElement> row;
        row.reserve(n);
        for (std::uint64_t x = 0; x < n; ++x) {
            auto xx = g.exponents(x);
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < fo.size(); ++i) s = (s + vv[i] * xx[i] % e * (e / fo[i])) % e;
            row.push_back(zp[s]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gacodes
