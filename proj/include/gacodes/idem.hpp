#pragma once

// Idempotents of semisimple abelian group algebras: subgroup-derived systems,
// primitive decompositions by character orbits, and the explicit families
// (cyclic chains, order 2p^n, q = 3 mod 8 on C_{2^m}, two and three primes
// over F_2), plus essential idempotents and the map to co-cyclic subgroups.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detail/arith.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "galg.hpp"
#include "groups.hpp"

namespace gacodes {

enum class Provenance { GroupHat, CoCyclic, CharacterOrbit, Construction };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::GroupHat: return "group-hat";
        case Provenance::CoCyclic: return "co-cyclic";
        case Provenance::CharacterOrbit: return "character-orbit";
        case Provenance::Construction: return "construction";
    }
    return "?";
}

struct IdempotentLabel {
    Provenance kind = Provenance::Construction;
    std::string name;
    std::optional<Subgroup> subgroup;    // the H of e_H, or G for the group hat
    std::vector<std::uint32_t> orbit;    // character indices of an orbit sum
};

template <class R>
struct IdempotentSystem {
    std::shared_ptr<const GroupAlgebra<R>> algebra;
    std::vector<AlgebraElement<R>> members;
    std::vector<IdempotentLabel> labels;
    bool hypothesis_holds = true;
    std::vector<std::string> notes;

    std::size_t size() const { return members.size(); }

    void add(AlgebraElement<R> e, IdempotentLabel l) {
        members.push_back(std::move(e));
        labels.push_back(std::move(l));
    }

    AlgebraElement<R> sum() const {
        auto s = algebra->zero();
        for (const auto& e : members) s += e;
        return s;
    }

    /// Empty string when the members are nonzero idempotents, pairwise orthogonal and sum to 1.
    std::string check() const {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i].is_zero()) return "member " + labels[i].name + " is zero";
            if (!members[i].is_idempotent()) return "member " + labels[i].name + " is not idempotent";
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!members[i].is_orthogonal(members[j]))
                    return "members " + labels[i].name + " and " + labels[j].name + " are not orthogonal";
        if (!(sum() == algebra->one())) return "members do not sum to 1";
        return {};
    }
    void validate() const {
        auto why = check();
        if (!why.empty()) throw VerificationError("idempotent system: " + why);
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        const auto& t = algebra->group();
        for (std::size_t i = 0; i < members.size(); ++i) {
            nlohmann::json j;
            j["label"] = labels[i].name;
            j["provenance"] = to_string(labels[i].kind);
            if (labels[i].subgroup) j["subgroup"] = subgroup_name(t, *labels[i].subgroup);
            if (!labels[i].orbit.empty()) j["orbit"] = labels[i].orbit;
            j["coefficients"] = members[i].to_json();
            arr.push_back(std::move(j));
        }
        return arr;
    }
};

using FieldIdempotents = IdempotentSystem<SmallField>;

/// Same members regardless of order.
template <class R>
bool same_members(const IdempotentSystem<R>& a, const IdempotentSystem<R>& b) {
    auto key = [](const IdempotentSystem<R>& s) {
        std::vector<std::vector<typename R::value_type>> v;
        for (const auto& e : s.members) v.push_back(e.coeffs());
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(a) == key(b);
}

namespace detail {

inline void require_semisimple(const AbelianAlgebra& a) {
    if (a.group.order() % a.field.characteristic() == 0)
        throw PreconditionError("F" + std::to_string(a.field.size()) + "[" + a.group.name() +
                                "] is not semisimple: the characteristic divides |G|");
}

inline std::vector<std::uint64_t> group_primes(const AbelianGroup& g) { return prime_divisors(g.order()); }

inline FieldElementVec sylow_factor(const AbelianAlgebra& a, const Subgroup& h, std::uint64_t p) {
    const auto& t = a.table();
    auto gp = sylow_subgroup(t, p);
    auto hp = intersect(t, h, gp);
    if (hp.order() == gp.order()) return a.algebra->hat(gp);
    return a.algebra->hat(hp) - a.algebra->hat(sharp_within(t, gp, hp));
}

}  // namespace detail

/// e_H: H^ - H#^ for p-groups, and the product of the Sylow-wise factors in general.
inline FieldElementVec e_H(const AbelianAlgebra& a, const Subgroup& h) {
    detail::require_semisimple(a);
    const auto& t = a.table();
    auto whole = whole_group(t);
    if (h.order() >= a.group.order() || !quotient_is_cyclic(t, whole, h))
        throw PreconditionError("e_H: " + subgroup_name(t, h) + " is not a co-cyclic subgroup of " + a.group.name());
    auto e = a.algebra->one();
    for (auto p : detail::group_primes(a.group)) e *= detail::sylow_factor(a, h, p);
    return e;
}

/// {G^} together with e_H for every co-cyclic H.
inline FieldIdempotents idempotent_system(const AbelianAlgebra& a) {
    detail::require_semisimple(a);
    const auto& t = a.table();
    FieldIdempotents s;
    s.algebra = a.algebra;
    auto whole = whole_group(t);
    s.add(a.algebra->hat(whole), {Provenance::GroupHat, "G^", whole, {}});
    for (auto& h : cocyclic_subgroups(a.group)) {
        auto name = "e_" + subgroup_name(t, h);
        s.add(e_H(a, h), {Provenance::CoCyclic, name, h, {}});
    }
    return s;
}

namespace detail {

/// Maps elements of the subfield F_q inside L back to SmallField indices.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const SmallField& base, const Field& big) : base_(base), big_(big) {
        if (base.degree() == 1) return;
        // root of the base modulus inside L, searched among the (q-1)-th roots of unity
        const auto q = base.size();
        auto gamma = primitive_root_of_unity(big, q - 1);
        const auto& f = base.field().modulus();
        auto beta = big.one();
        bool found = false;
        for (std::uint32_t j = 0; j + 1 < q; ++j, beta *= gamma) {
            auto v = big.zero();
            for (std::size_t i = f.size(); i-- > 0;) v = v * beta + big.from_int(static_cast<long long>(f[i]));
            if (v.is_zero()) {
                found = true;
                break;
            }
        }
        detail::verify(found, "no root of the base-field modulus in the splitting field");
        std::vector<FieldElement> beta_pow{big.one()};
        for (unsigned i = 1; i < base.degree(); ++i) beta_pow.push_back(beta_pow.back() * beta);
        for (std::uint32_t idx = 0; idx < q; ++idx) {
            auto coords = base.to_element(idx).coeffs();
            auto x = big.zero();
            for (std::size_t i = 0; i < coords.size(); ++i) x += beta_pow[i] * big.from_int(static_cast<long long>(coords[i]));
            table_.emplace(x.coeffs(), idx);
        }
    }

    /// Coerces a Frobenius-fixed coefficient into the base field; anything else is a hard error.
    SmallField::value_type coerce(const FieldElement& x) const {
        if (base_.degree() == 1) {
            detail::verify(x.in_prime_field(), "orbit-sum coefficient is not fixed by Frobenius");
            return static_cast<SmallField::value_type>(x.coeffs()[0]);
        }
        auto it = table_.find(x.coeffs());
        detail::verify(it != table_.end(), "orbit-sum coefficient is not fixed by Frobenius");
        return it->second;
    }

private:
    SmallField base_;
    Field big_;
    std::map<std::vector<std::uint64_t>, SmallField::value_type> table_;
};

}  // namespace detail

/// Orbits of the dual group under chi -> chi^q, in the group's index order;
/// each orbit is listed from its smallest index.
inline std::vector<std::vector<std::uint32_t>> q_orbits(const AbelianGroup& g, std::uint64_t q) {
    const auto n = g.order();
    const auto& f = g.factor_orders();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::uint32_t>> orbits;
    for (std::uint64_t v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<std::uint32_t> orb;
        auto x = v;
        while (!seen[x]) {
            seen[x] = 1;
            orb.push_back(static_cast<std::uint32_t>(x));
            auto e = g.exponents(x);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::mul_mod(e[i], q % f[i], f[i]);
            x = g.index(e);
        }
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

/// The complete set of primitive idempotents via character orbit sums over a splitting field.
inline FieldIdempotents primitive_idempotents(const AbelianAlgebra& a) {
    const auto q = a.field.size();
    if (std::gcd<std::uint64_t>(q, a.group.order()) != 1)
        throw PreconditionError("primitive_idempotents: gcd(q, |G|) != 1, F" + std::to_string(q) + "[" + a.group.name() +
                                "] is not semisimple");
    FieldIdempotents s;
    s.algebra = a.algebra;
    const auto n = a.group.order();
    const auto ex = a.group.exponent();
    if (n == 1) {
        s.add(a.algebra->one(), {Provenance::CharacterOrbit, "orbit{0}", {}, {0}});
        return s;
    }
    const auto m = order_mod(q, ex);
    const Field big = make_extension(a.field.characteristic(), a.field.degree() * static_cast<unsigned>(m));
    const auto zeta = primitive_root_of_unity(big, ex);
    std::vector<FieldElement> zp{big.one()};
    for (std::uint64_t k = 1; k < ex; ++k) zp.push_back(zp.back() * zeta);
    const auto inv_n = big.from_int(static_cast<long long>(n % big.characteristic())).inverse();
    detail::SubfieldEmbedding embed(a.field, big);

    const auto& fo = a.group.factor_orders();
    std::vector<std::vector<std::uint64_t>> ex_vec(n);
    for (std::uint64_t x = 0; x < n; ++x) ex_vec[x] = a.group.exponents(x);
    const auto p = big.characteristic();
    const auto deg = big.degree();

    for (const auto& orb : q_orbits(a.group, q)) {
        std::vector<SmallField::value_type> coeffs(n);
        for (std::uint64_t g = 0; g < n; ++g) {
            // sum over the orbit of chi_v(g^{-1}) = zeta^{-<v,g>}
            std::vector<std::uint64_t> acc(deg, 0);
            for (auto v : orb) {
                std::uint64_t s_ = 0;
                for (std::size_t i = 0; i < fo.size(); ++i) s_ = (s_ + ex_vec[v][i] * ex_vec[g][i] % ex * (ex / fo[i])) % ex;
                const auto& z = zp[(ex - s_) % ex].coeffs();
                for (unsigned j = 0; j < deg; ++j) acc[j] += z[j];
            }
            for (auto& c : acc) c %= p;
            coeffs[g] = embed.coerce(big.element(std::move(acc)) * inv_n);
        }
        std::string name = "orbit{";
        for (std::size_t i = 0; i < orb.size(); ++i) name += (i ? "," : "") + std::to_string(orb[i]);
        name += "}";
        s.add(a.algebra->from_coeffs(std::move(coeffs)), {Provenance::CharacterOrbit, name, {}, orb});
    }
    return s;
}

/// True iff e is itself one member of the complete primitive system.
template <class R>
bool is_primitive(const AlgebraElement<R>& e, const IdempotentSystem<R>& primitives) {
    if (!e.is_idempotent()) throw PreconditionError("is_primitive: element is not idempotent");
    std::size_t hits = 0;
    const AlgebraElement<R>* hit = nullptr;
    for (const auto& eps : primitives.members)
        if (e * eps == eps) {
            ++hits;
            hit = &eps;
        }
    return hits == 1 && *hit == e;
}

struct PrimitivityReport {
    std::uint64_t q = 0, exponent = 0;
    bool a = false, b = false, c = false, d = false;
    std::string detail;
    /// Whether the conditions predict that every e_H is primitive.
    bool all_eh_primitive() const { return exponent == 1 || a || b || c || d; }
};

/// Which of the cases (a) e=2, q odd; (b) e=4, q=3 mod 4; (c) e=p^n with o(q)=phi(p^n);
/// (d) e=2p^n with o(q)=phi(p^n) holds for the exponent e of G.
inline PrimitivityReport primitivity_conditions(std::uint64_t q, const AbelianGroup& g) {
    detail::require(std::gcd(q, g.order()) == 1, "primitivity_conditions: gcd(q, |G|) != 1");
    PrimitivityReport r;
    r.q = q;
    r.exponent = g.exponent();
    const auto e = r.exponent;
    r.a = e == 2 && q % 2 == 1;
    r.b = e == 4 && q % 4 == 3;
    if (auto [p, n] = detail::prime_power(e); p != 0) r.c = order_mod(q, e) == euler_phi(e);
    if (e % 2 == 0 && e > 2) {
        auto [p, n] = detail::prime_power(e / 2);
        if (p > 2) r.d = order_mod(q, e) == euler_phi(e / 2);
    }
    std::string held;
    for (auto [flag, name] : {std::pair{r.a, "a"}, {r.b, "b"}, {r.c, "c"}, {r.d, "d"}})
        if (flag) held += std::string(held.empty() ? "" : ",") + name;
    r.detail = "exp(G)=" + std::to_string(e) + ", q=" + std::to_string(q) + ", o(q mod e)=" +
               std::to_string(e > 1 ? order_mod(q, e) : 1) + "; cases holding: " + (held.empty() ? "none" : held);
    return r;
}

/// e_0 = G^ and e_i = G_i^ - G_{i-1}^ along the chain G_i = <g^{p^i}> of a cyclic p-group.
inline FieldIdempotents cyclic_chain_idempotents(const AbelianAlgebra& a) {
    const auto p = a.group.p_group_prime();
    if (!a.group.is_cyclic() || p == 0)
        throw PreconditionError("cyclic_chain_idempotents: " + a.group.name() + " is not a cyclic p-group");
    detail::require_semisimple(a);
    const auto& t = a.table();
    const auto n = a.group.order();
    const auto g = a.group.generator(0);
    FieldIdempotents s;
    s.algebra = a.algebra;
    std::vector<Subgroup> chain;
    for (std::uint64_t pi = 1; pi <= n; pi *= p) chain.push_back(generate_subgroup(t, {t.power(g, pi % n)}));
    s.add(a.algebra->hat(chain[0]), {Provenance::GroupHat, "e_0", chain[0], {}});
    for (std::size_t i = 1; i < chain.size(); ++i)
        s.add(a.algebra->hat(chain[i]) - a.algebra->hat(chain[i - 1]),
              {Provenance::CoCyclic, "e_" + std::to_string(i), chain[i], {}});
    s.hypothesis_holds = order_mod(a.field.size(), n) == euler_phi(n);
    if (!s.hypothesis_holds)
        s.notes.push_back("o(q) != phi(|G|): the chain idempotents are orthogonal and sum to 1 but are not all primitive");
    return s;
}

/// Products e*f of the subgroup systems of the elementary 2-part E and the odd p-part B.
inline FieldIdempotents order_2pn_idempotents(const AbelianAlgebra& a) {
    const auto q = a.field.size();
    if (q % 2 == 0) throw PreconditionError("order_2pn_idempotents: q must be odd");
    const auto& t = a.table();
    auto primes = detail::group_primes(a.group);
    if (primes.size() != 2 || primes[0] != 2)
        throw PreconditionError("order_2pn_idempotents: G must be a 2-group times an odd p-group");
    auto e2 = sylow_subgroup(t, 2);
    for (auto x : e2.elements)
        if (t.element_order(x) > 2) throw PreconditionError("order_2pn_idempotents: the 2-part must be elementary abelian");
    auto bp = sylow_subgroup(t, primes[1]);
    std::uint64_t pr = 1;
    for (auto x : bp.elements) pr = std::max(pr, t.element_order(x));

    auto part_system = [&](const Subgroup& k) {
        std::vector<std::pair<FieldElementVec, std::string>> out;
        out.emplace_back(a.algebra->hat(k), "hat" + subgroup_name(t, k));
        for (auto& h : cocyclic_within(t, k))
            out.emplace_back(a.algebra->hat(h) - a.algebra->hat(sharp_within(t, k, h)), "e_" + subgroup_name(t, h));
        return out;
    };
    FieldIdempotents s;
    s.algebra = a.algebra;
    for (auto& [e, en] : part_system(e2))
        for (auto& [f, fn] : part_system(bp)) s.add(e * f, {Provenance::Construction, en + "*" + fn, {}, {}});
    s.hypothesis_holds = order_mod(q, 2 * pr) == euler_phi(pr);
    if (!s.hypothesis_holds)
        s.notes.push_back("o(q) != phi(p^n) in U(Z_{2p^n}): the products are orthogonal but not all primitive");
    return s;
}

/// Explicit primitive idempotents of F_q C_{2^m} for q = 3 (mod 8) and m >= 3.
inline FieldIdempotents prado_mod8_idempotents(unsigned m, const SmallField& f) {
    if (m < 3) throw PreconditionError("prado_mod8_idempotents: m must be at least 3");
    if (f.size() % 8 != 3) throw PreconditionError("prado_mod8_idempotents: q must be 3 mod 8");
    auto a_ = make_abelian_algebra(AbelianGroup({1ULL << m}), f);
    const auto& alg = *a_.algebra;
    const std::uint64_t n = 1ULL << m;
    const auto minus_two = f.neg(f.from_int(2));
    std::optional<SmallField::value_type> alpha;
    for (std::uint32_t x = 0; x < f.size() && !alpha; ++x)
        if (f.mul(x, x) == minus_two) alpha = x;
    detail::verify(alpha.has_value(), "no square root of -2 although q = 3 mod 8");

    auto mono = [&](std::uint64_t k, SmallField::value_type c) { return alg.basis(static_cast<std::uint32_t>(k % n), c); };
    auto inv_pow2 = [&](unsigned k) { return f.inv(f.pow(f.from_int(2), k)); };

    FieldIdempotents s;
    s.algebra = a_.algebra;
    auto e0 = alg.zero(), e1 = alg.zero(), e2 = alg.zero();
    for (std::uint64_t j = 0; j < n; ++j) {
        e0 += mono(j, f.one());
        e1 += mono(j, j % 2 ? f.neg(f.one()) : f.one());
    }
    for (std::uint64_t j = 0; j < n / 2; ++j) e2 += mono(2 * j, j % 2 ? f.neg(f.one()) : f.one());
    s.add(e0.scaled(inv_pow2(m)), {Provenance::Construction, "e_0", {}, {}});
    s.add(e1.scaled(inv_pow2(m)), {Provenance::Construction, "e_1", {}, {}});
    s.add(e2.scaled(inv_pow2(m - 1)), {Provenance::Construction, "e_2", {}, {}});
    for (unsigned k = 3; k <= m; ++k) {
        // (1 - a^{2^{k-1}}) (sum_{j<2^{m-k}} a^{j 2^k}) (2 +- alpha a^{2^{k-3}} +- alpha a^{3*2^{k-3}}) / 2^{m-k+3}
        auto left = alg.one() - mono(1ULL << (k - 1), f.one());
        auto mid = alg.zero();
        for (std::uint64_t j = 0; j < (1ULL << (m - k)); ++j) mid += mono(j << k, f.one());
        const std::uint64_t s1 = 1ULL << (k - 3), s3 = 3ULL << (k - 3);
        for (int sign : {1, -1}) {
            auto al = sign > 0 ? *alpha : f.neg(*alpha);
            auto right = mono(0, f.from_int(2)) + mono(s1, al) + mono(s3, al);
            auto e = (left * mid * right).scaled(inv_pow2(m - k + 3));
            s.add(std::move(e), {Provenance::Construction, (sign > 0 ? "e_" : "e'_") + std::to_string(k), {}, {}});
        }
    }
    return s;
}

namespace detail {

/// u, u' of the quadratic-residue split: sums of a^j over residues / non-residues mod p,
/// with an extra 1 when p = 3 mod 4.
inline std::pair<FieldElementVec, FieldElementVec> uv_raw(const FieldAlgebra& alg, std::uint32_t a, std::uint64_t p) {
    const auto& t = alg.group();
    std::vector<char> residue(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) residue[x * x % p] = 1;
    auto u = alg.zero(), v = alg.zero();
    if (p % 4 == 3) {
        u += alg.one();
        v += alg.one();
    }
    for (std::uint64_t j = 1; j < p; ++j) (residue[j] ? u : v) += alg.basis(t.power(a, j));
    return {u, v};
}

}  // namespace detail

/// u and u' for an element a of odd prime order p in F_2 G.
inline std::pair<FieldElementVec, FieldElementVec> uv_elements(const AbelianAlgebra& a, std::uint32_t g, std::uint64_t p) {
    if (a.field.size() != 2) throw PreconditionError("uv_elements: base field must be F_2");
    if (p % 2 == 0 || !detail::is_prime(p)) throw PreconditionError("uv_elements: p must be an odd prime");
    if (a.table().element_order(g) != p) throw PreconditionError("uv_elements: element order differs from p");
    return detail::uv_raw(*a.algebra, g, p);
}

/// Violations of: gcd(p-1, q-1) = 2; 2 generates U(Z_{p^2}) and U(Z_{q^2}); gcd(p-1, q) = gcd(p, q-1) = 1.
inline std::vector<std::string> two_prime_hypotheses(std::uint64_t p, std::uint64_t q) {
    std::vector<std::string> v;
    if (std::gcd(p - 1, q - 1) != 2) v.push_back("gcd(p-1,q-1) != 2");
    if (order_mod(2, p * p) != euler_phi(p * p)) v.push_back("2 does not generate U(Z_" + std::to_string(p * p) + ")");
    if (order_mod(2, q * q) != euler_phi(q * q)) v.push_back("2 does not generate U(Z_" + std::to_string(q * q) + ")");
    if (std::gcd(p - 1, q) != 1 || std::gcd(p, q - 1) != 1) v.push_back("gcd(p-1,q) or gcd(p,q-1) != 1");
    return v;
}

struct E1E2 {
    FieldElementVec e1, e2;
    std::vector<std::string> violations;
};

/// e1(H,K), e2(H,K) splitting e_H e_K for H co-cyclic in G_p and K co-cyclic in G_q, over F_2.
inline E1E2 e1e2(const AbelianAlgebra& a, const Subgroup& h, const Subgroup& k) {
    if (a.field.size() != 2) throw PreconditionError("e1e2: base field must be F_2");
    auto primes = detail::group_primes(a.group);
    if (primes.size() != 2 || primes[0] == 2) throw PreconditionError("e1e2: G must be G_p x G_q for odd primes p, q");
    const auto& t = a.table();
    auto gp = sylow_subgroup(t, primes[0]), gq = sylow_subgroup(t, primes[1]);
    if (!h.subset_of(gp) || h.order() == gp.order() || !quotient_is_cyclic(t, gp, h))
        throw PreconditionError("e1e2: H is not co-cyclic in the p-part");
    if (!k.subset_of(gq) || k.order() == gq.order() || !quotient_is_cyclic(t, gq, k))
        throw PreconditionError("e1e2: K is not co-cyclic in the q-part");
    E1E2 r;
    r.violations = two_prime_hypotheses(primes[0], primes[1]);
    auto pick = [&](const Subgroup& sub, const Subgroup& amb) {
        auto up = sharp_within(t, amb, sub);
        for (auto x : up.elements)
            if (!sub.contains(x)) return x;
        throw VerificationError("e1e2: empty sharp difference");
    };
    const auto& alg = *a.algebra;
    auto [u, u2] = detail::uv_raw(alg, pick(h, gp), primes[0]);
    auto [v, v2] = detail::uv_raw(alg, pick(k, gq), primes[1]);
    auto hh = alg.hat(h), kh = alg.hat(k);
    r.e1 = (u * hh) * (v * kh) + (u2 * hh) * (v2 * kh);
    r.e2 = (u * hh) * (v2 * kh) + (u2 * hh) * (v * kh);
    return r;
}

/// The primitive system of F_2[G_p x G_q] built from the two Sylow subgroup systems and e1/e2.
inline FieldIdempotents two_prime_idempotents(const AbelianAlgebra& a) {
    if (a.field.size() != 2) throw PreconditionError("two_prime_idempotents: base field must be F_2");
    auto primes = detail::group_primes(a.group);
    if (primes.size() != 2 || primes[0] == 2) throw PreconditionError("two_prime_idempotents: G must be G_p x G_q, p, q odd");
    const auto& t = a.table();
    const auto& alg = *a.algebra;
    auto gp = sylow_subgroup(t, primes[0]), gq = sylow_subgroup(t, primes[1]);
    FieldIdempotents s;
    s.algebra = a.algebra;
    s.notes = two_prime_hypotheses(primes[0], primes[1]);
    s.hypothesis_holds = s.notes.empty();
    auto gph = alg.hat(gp), gqh = alg.hat(gq);
    s.add(gph * gqh, {Provenance::GroupHat, "G^", whole_group(t), {}});
    auto hs = cocyclic_within(t, gp), ks = cocyclic_within(t, gq);
    for (auto& k : ks)
        s.add(gph * (alg.hat(k) - alg.hat(sharp_within(t, gq, k))), {Provenance::Construction, "Gp^*e_" + subgroup_name(t, k), {}, {}});
    for (auto& h : hs)
        s.add((alg.hat(h) - alg.hat(sharp_within(t, gp, h))) * gqh, {Provenance::Construction, "e_" + subgroup_name(t, h) + "*Gq^", {}, {}});
    for (auto& h : hs)
        for (auto& k : ks) {
            auto r = e1e2(a, h, k);
            auto tag = "(" + subgroup_name(t, h) + "," + subgroup_name(t, k) + ")";
            s.add(r.e1, {Provenance::Construction, "e1" + tag, {}, {}});
            s.add(r.e2, {Provenance::Construction, "e2" + tag, {}, {}});
        }
    return s;
}

/// The fourteen idempotents e_0..e_13 of F_2(C_{p1} x C_{p2} x C_{p3}).
inline FieldIdempotents three_prime_idempotents(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3) {
    const std::uint64_t ps[3] = {p1, p2, p3};
    for (auto p : ps)
        if (p % 2 == 0 || !detail::is_prime(p)) throw PreconditionError("three_prime_idempotents: primes must be odd");
    if (p1 == p2 || p1 == p3 || p2 == p3) throw PreconditionError("three_prime_idempotents: primes must be distinct");
    for (int i = 0; i < 3; ++i) {
        if (order_mod(2, ps[i]) != ps[i] - 1)
            throw PreconditionError("three_prime_idempotents: 2 does not generate U(Z_" + std::to_string(ps[i]) + ")");
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(ps[i] - 1, ps[j] - 1) != 2)
                throw PreconditionError("three_prime_idempotents: gcd(p_i-1, p_j-1) != 2");
    }
    auto a_ = make_abelian_algebra(AbelianGroup({p1, p2, p3}), SmallField::prime(2));
    const auto& alg = *a_.algebra;
    const auto& fo = a_.group.factor_orders();
    auto gen = [&](std::uint64_t p) {
        for (std::size_t i = 0; i < fo.size(); ++i)
            if (fo[i] == p) return a_.group.generator(i);
        throw VerificationError("three_prime_idempotents: missing factor");
    };
    const auto ga = gen(p1), gb = gen(p2), gc = gen(p3);
    auto ah = alg.hat_of(ga), bh = alg.hat_of(gb), ch = alg.hat_of(gc);
    auto one = alg.one();
    auto u = detail::uv_raw(alg, ga, p1).first, v = detail::uv_raw(alg, gb, p2).first, w = detail::uv_raw(alg, gc, p3).first;
    auto u2 = u * u, v2 = v * v, w2 = w * w;
    auto d = (one - ah) * (one - bh) * (one - ch);

    FieldIdempotents s;
    s.algebra = a_.algebra;
    auto add = [&](const char* name, FieldElementVec e) { s.add(std::move(e), {Provenance::Construction, name, {}, {}}); };
    add("e_0", ah * bh * ch);
    add("e_1", ah * bh * (one - ch));
    add("e_2", ah * (one - bh) * ch);
    add("e_3", (one - ah) * bh * ch);
    add("e_4", (u * v + u2 * v2) * ch);
    add("e_5", (u2 * v + u * v2) * ch);
    add("e_6", (u * w + u2 * w2) * bh);
    add("e_7", (u2 * w + u * w2) * bh);
    add("e_8", (v * w + v2 * w2) * ah);
    add("e_9", (v2 * w + v * w2) * ah);
    add("e_10", d + u2 * v2 * w + u * v * w2);
    add("e_11", d + u2 * v2 * w2 + u * v * w);
    add("e_12", d + u2 * v * w + u * v2 * w2);
    add("e_13", d + u * v2 * w + u2 * v * w2);
    return s;
}

/// Primitive e with e*H^ = 0 for every subgroup H != {1}. Checking subgroups of prime
/// order suffices since every nontrivial H^ is a multiple of such a P^.
inline FieldIdempotents essential_idempotents(const AbelianAlgebra& a) {
    auto prim = primitive_idempotents(a);
    const auto& t = a.table();
    std::vector<FieldElementVec> minimal_hats;
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t x = 1; x < t.order; ++x) {
        if (!detail::is_prime(t.element_order(x))) continue;
        auto h = generate_subgroup(t, {x});
        if (seen.insert(h.elements).second) minimal_hats.push_back(a.algebra->hat(h));
    }
    FieldIdempotents s;
    s.algebra = a.algebra;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        bool essential = std::all_of(minimal_hats.begin(), minimal_hats.end(),
                                     [&](const auto& hh) { return (prim.members[i] * hh).is_zero(); });
        if (essential) s.add(prim.members[i], prim.labels[i]);
    }
    if (s.size() > 0) detail::verify(a.group.is_cyclic(), "essential idempotent found in a non-cyclic group");
    return s;
}

/// The co-cyclic H with e*e_H = e (G itself for e = G^), checked against the e_H system.
inline Subgroup phi_map(const FieldIdempotents& eh_system, const FieldElementVec& e) {
    std::optional<Subgroup> found;
    for (std::size_t i = 0; i < eh_system.size(); ++i) {
        auto prod = e * eh_system.members[i];
        if (prod == e) {
            detail::verify(!found, "phi_map: more than one subgroup idempotent fixes e");
            found = eh_system.labels[i].subgroup;
        } else {
            detail::verify(prod.is_zero(), "phi_map: e is not primitive (partial overlap with an e_H)");
        }
    }
    detail::verify(found.has_value(), "phi_map: no subgroup idempotent fixes e");
    return *found;
}

inline Subgroup phi_map(const AbelianAlgebra& a, const FieldElementVec& e) { return phi_map(idempotent_system(a), e); }

}  // namespace gacodes
