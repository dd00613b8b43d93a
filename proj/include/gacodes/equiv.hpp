#pragma once

// G-equivalence of minimal abelian codes and G-isomorphism of subgroups.
//
// Classes are found by applying every automorphism of G to the coefficient
// vectors of the primitive idempotents, so the correspondence with subgroup
// classes through the map Phi is checked rather than assumed.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "codes.hpp"
#include "error.hpp"
#include "galg.hpp"
#include "groups.hpp"
#include "idem.hpp"

namespace gacodes {

/// Linear extension of psi: the coefficient of psi(g) in the result is the coefficient of g.
template <class R>
AlgebraElement<R> apply_automorphism(const Automorphism& psi, const AlgebraElement<R>& x) {
    const auto n = x.size();
    if (psi.perm.size() != n) throw PreconditionError("apply_automorphism: automorphism of a different group");
    std::vector<char> hit(n, 0);
    auto out = x.algebra().zero();
    for (std::uint32_t g = 0; g < n; ++g) {
        auto y = psi.perm[g];
        if (y >= n || hit[y]) throw PreconditionError("apply_automorphism: map is not bijective");
        hit[y] = 1;
        out.set(y, x[g]);
    }
    return out;
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

inline std::vector<std::uint32_t> image_elements(const Automorphism& psi, const Subgroup& h) {
    std::vector<std::uint32_t> e;
    e.reserve(h.elements.size());
    for (auto x : h.elements) e.push_back(psi.perm[x]);
    std::sort(e.begin(), e.end());
    return e;
}

/// Aut(G)-orbits on a list of subgroups, listed in order of first appearance.
inline std::vector<std::vector<Subgroup>> subgroup_orbits(const std::vector<Subgroup>& subs, const std::vector<Automorphism>& auts) {
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i].elements] = i;
    UnionFind uf(subs.size());
    for (const auto& psi : auts)
        for (std::size_t i = 0; i < subs.size(); ++i) {
            auto it = index.find(image_elements(psi, subs[i]));
            verify(it != index.end(), "automorphic image of a listed subgroup is missing from the list");
            uf.unite(i, it->second);
        }
    std::map<std::size_t, std::size_t> slot;
    std::vector<std::vector<Subgroup>> out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        auto r = uf.find(i);
        auto [it, fresh] = slot.emplace(r, out.size());
        if (fresh) out.emplace_back();
        out[it->second].push_back(subs[i]);
    }
    return out;
}

}  // namespace detail

struct CodeClass {
    std::vector<std::size_t> members;  // indices into the primitive system
    FieldElementVec representative;    // lexicographically least member
    std::size_t dimension = 0, min_weight = 0;
    WeightDistribution distribution;
    std::vector<Subgroup> phi_images;  // distinct Phi(e) over the members
};

struct EquivalenceReport {
    AbelianAlgebra algebra;
    FieldIdempotents primitives;
    std::vector<Subgroup> phi;  // Phi(e) per primitive
    std::vector<CodeClass> classes;
    std::vector<std::vector<Subgroup>> subgroup_classes;  // Aut-orbits on S_cc(G) and G
    std::size_t automorphism_count = 0;
    std::vector<std::string> findings;

    std::size_t class_of(std::size_t member) const {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (std::find(classes[c].members.begin(), classes[c].members.end(), member) != classes[c].members.end()) return c;
        throw PreconditionError("class_of: member index out of range");
    }
    /// Number of subgroup classes met by some Phi-image.
    std::size_t phi_image_orbit_count() const {
        std::size_t n = 0;
        for (const auto& cls : subgroup_classes)
            for (const auto& h : cls)
                if (std::find(phi.begin(), phi.end(), h) != phi.end()) {
                    ++n;
                    break;
                }
        return n;
    }

    nlohmann::json to_json() const {
        const auto& t = algebra.table();
        nlohmann::json j;
        j["group"] = algebra.group.name();
        j["q"] = algebra.field.size();
        j["automorphisms"] = automorphism_count;
        j["classes"] = nlohmann::json::array();
        for (const auto& c : classes) {
            nlohmann::json cj;
            cj["size"] = c.members.size();
            cj["dimension"] = c.dimension;
            cj["min_weight"] = c.min_weight;
            cj["weight_distribution"] = c.distribution.to_json();
            cj["subgroups"] = nlohmann::json::array();
            for (const auto& h : c.phi_images) cj["subgroups"].push_back(subgroup_name(t, h));
            cj["representative"] = c.representative.to_json();
            j["classes"].push_back(std::move(cj));
        }
        j["subgroup_classes"] = nlohmann::json::array();
        for (const auto& cls : subgroup_classes) {
            nlohmann::json cj = nlohmann::json::array();
            for (const auto& h : cls) cj.push_back(subgroup_name(t, h));
            j["subgroup_classes"].push_back(std::move(cj));
        }
        j["findings"] = findings;
        return j;
    }
};

/// G-isomorphism classes of all subgroups of G.
inline std::vector<std::vector<Subgroup>> g_isomorphism_classes(const AbelianGroup& g,
                                                               std::uint64_t aut_budget = kDefaultAutBudget) {
    return detail::subgroup_orbits(all_subgroups(g), automorphisms(g, aut_budget));
}

/// Partition of the primitive idempotents of F_qG into Aut(G)-orbits, with per-class code data.
inline EquivalenceReport g_equivalence_classes(const AbelianAlgebra& a, std::uint64_t aut_budget = kDefaultAutBudget,
                                               std::uint64_t weight_budget = kDefaultWeightBudget) {
    EquivalenceReport r{a, primitive_idempotents(a), {}, {}, {}, 0, {}};
    const auto& t = a.table();
    const auto& prim = r.primitives;
    const auto auts = automorphisms(a.group, aut_budget);
    r.automorphism_count = auts.size();

    auto eh = idempotent_system(a);
    for (const auto& e : prim.members) r.phi.push_back(phi_map(eh, e));

    std::map<std::vector<SmallField::value_type>, std::size_t> index;
    for (std::size_t i = 0; i < prim.size(); ++i) index[prim.members[i].coeffs()] = i;
    detail::UnionFind uf(prim.size());
    for (const auto& psi : auts)
        for (std::size_t i = 0; i < prim.size(); ++i) {
            auto img = apply_automorphism(psi, prim.members[i]);
            auto it = index.find(img.coeffs());
            detail::verify(it != index.end(), "an automorphism maps a primitive idempotent outside the primitive system");
            // psi(H_e) = H_{psi(e)} on every orbit edge
            detail::verify(detail::image_elements(psi, r.phi[i]) == r.phi[it->second].elements,
                           "psi(H_e) differs from H_{psi(e)}");
            uf.unite(i, it->second);
        }

    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < prim.size(); ++i) {
        auto [it, fresh] = slot.emplace(uf.find(i), r.classes.size());
        if (fresh) r.classes.emplace_back();
        r.classes[it->second].members.push_back(i);
    }
    for (auto& c : r.classes) {
        std::size_t best = c.members[0];
        for (auto m : c.members)
            if (prim.members[m] < prim.members[best]) best = m;
        c.representative = prim.members[best];
        auto code = code_from_idempotent(c.representative);
        c.dimension = code.dimension();
        c.distribution = weight_distribution(code, weight_budget);
        c.min_weight = c.distribution.min_weight();
        for (auto m : c.members) {
            auto other = code_from_idempotent(prim.members[m]);
            detail::verify(other.dimension() == c.dimension && weight_distribution(other, weight_budget) == c.distribution,
                           "G-equivalent codes with different dimension or weight distribution");
            if (std::find(c.phi_images.begin(), c.phi_images.end(), r.phi[m]) == c.phi_images.end())
                c.phi_images.push_back(r.phi[m]);
        }
    }

    auto subs = cocyclic_subgroups(a.group);
    subs.push_back(whole_group(t));
    r.subgroup_classes = detail::subgroup_orbits(subs, auts);

    // converse direction: Phi-images in one subgroup class lie in one code class
    for (std::size_t i = 0; i < prim.size(); ++i)
        for (std::size_t j = i + 1; j < prim.size(); ++j) {
            bool same_sub = false;
            for (const auto& cls : r.subgroup_classes) {
                bool hi = std::find(cls.begin(), cls.end(), r.phi[i]) != cls.end();
                bool hj = std::find(cls.begin(), cls.end(), r.phi[j]) != cls.end();
                if (hi || hj) {
                    same_sub = hi && hj;
                    break;
                }
            }
            if (same_sub && uf.find(i) != uf.find(j))
                detail::verify(false, "Phi-images are G-isomorphic but the codes are not G-equivalent");
        }
    if (r.classes.size() != r.phi_image_orbit_count())
        r.findings.push_back("code classes (" + std::to_string(r.classes.size()) + ") differ from Phi-image subgroup classes (" +
                             std::to_string(r.phi_image_orbit_count()) + ")");
    return r;
}

struct MillerCensus {
    std::size_t classes = 0;
    std::uint64_t tau = 0;
    bool theorem_a_holds = false;
    /// Pairs of inequivalent classes with equal weight distributions.
    std::vector<std::pair<std::size_t, std::size_t>> equal_distribution_pairs;
    bool theorem_b_holds() const { return equal_distribution_pairs.empty(); }
};

inline MillerCensus miller_census(const EquivalenceReport& r) {
    MillerCensus m;
    m.classes = r.classes.size();
    m.tau = divisor_count(r.algebra.group.exponent());
    m.theorem_a_holds = m.classes == m.tau;
    for (std::size_t i = 0; i < r.classes.size(); ++i)
        for (std::size_t j = i + 1; j < r.classes.size(); ++j)
            if (r.classes[i].distribution == r.classes[j].distribution) m.equal_distribution_pairs.emplace_back(i, j);
    return m;
}

inline MillerCensus miller_census(const AbelianAlgebra& a) { return miller_census(g_equivalence_classes(a)); }

struct HomocyclicRow {
    std::size_t member = 0;       // index into the primitive system
    std::string k, h;             // K and the generator h of the complement
    unsigned chain_index = 0;     // i with e_h = <h^{p^i}>^ - <h^{p^{i-1}}>^, 0 for G^
    std::size_t dimension = 0, weight = 0;
    std::size_t expected_dimension = 0, expected_weight = 0;
    std::size_t printed_weight = 0;  // the value the printed table formula gives
};

struct HomocyclicReport {
    std::uint64_t p = 0;
    unsigned r = 0, m = 0;
    std::vector<HomocyclicRow> rows;
    std::size_t classes = 0;
    std::vector<std::string> findings;
};

/// For G = (C_{p^r})^m with o(q) = phi(p^r): writes every primitive other than G^ as K^ e_h with
/// K of type (C_{p^r})^{m-1}, G = K x <h>, and e_h a chain idempotent of <h>.
inline HomocyclicReport homocyclic_idempotent_form(const AbelianAlgebra& a, std::uint64_t weight_budget = kDefaultWeightBudget) {
    const auto& f = a.group.factor_orders();
    const auto pr = f.empty() ? 0 : f[0];
    auto [p, r] = detail::prime_power(pr);
    if (f.size() < 2 || p == 0 || std::any_of(f.begin(), f.end(), [&](auto x) { return x != pr; }))
        throw PreconditionError("homocyclic_idempotent_form: G must be (C_{p^r})^m with m >= 2");
    const auto q = a.field.size();
    if (q % p == 0 || order_mod(q, pr) != euler_phi(pr))
        throw PreconditionError("homocyclic_idempotent_form: o(q) != phi(p^r) in U(Z_{p^r})");
    const unsigned m = static_cast<unsigned>(f.size());
    HomocyclicReport rep{p, r, m, {}, 0, {}};
    const auto& t = a.table();
    const auto& alg = *a.algebra;
    auto prim = primitive_idempotents(a);
    const auto ghat = alg.hat(whole_group(t));

    auto order_profile = [&](const std::vector<std::uint32_t>& elems) {
        std::map<std::uint64_t, std::size_t> c;
        for (auto x : elems) ++c[t.element_order(x)];
        return c;
    };
    auto target = order_profile(whole_group(*AbelianGroup(std::vector<std::uint64_t>(m - 1, pr)).table()).elements);
    std::vector<Subgroup> ks;
    for (auto& s : all_subgroups(a.group))
        if (order_profile(s.elements) == target) ks.push_back(s);
    std::vector<std::uint32_t> hs;
    for (std::uint32_t x = 0; x < t.order; ++x)
        if (t.element_order(x) == pr) hs.push_back(x);

    auto dims = [&](unsigned i) -> std::size_t { return i == 0 ? 1 : detail::checked_pow(p, i - 1) * (p - 1); };
    auto weight_exp = [&](unsigned i, bool printed) -> std::size_t {
        long long base = static_cast<long long>(r) * (m - 1);
        long long off = static_cast<long long>(r) - i;
        return 2 * detail::checked_pow(p, static_cast<unsigned>(printed && i >= 3 ? base - off : base + off));
    };

    for (std::size_t idx = 0; idx < prim.size(); ++idx) {
        const auto& e = prim.members[idx];
        auto code = code_from_idempotent(e);
        HomocyclicRow row;
        row.member = idx;
        row.dimension = code.dimension();
        row.weight = minimum_weight(code, weight_budget);
        if (e == ghat) {
            row.k = "G";
            row.expected_dimension = 1;
            row.expected_weight = row.printed_weight = detail::checked_pow(p, r * m);
            rep.rows.push_back(std::move(row));
            continue;
        }
        bool found = false;
        for (const auto& k : ks) {
            auto kh = alg.hat(k);
            if (!(kh * e == e)) continue;
            for (auto h : hs) {
                auto hsub = generate_subgroup(t, {h});
                if (intersect(t, hsub, k).order() != 1) continue;
                for (unsigned i = 1; i <= r && !found; ++i) {
                    auto lo = alg.hat_of(t.power(h, detail::checked_pow(p, i)));
                    auto hi = alg.hat_of(t.power(h, detail::checked_pow(p, i - 1)));
                    if (kh * (lo - hi) == e) {
                        found = true;
                        row.k = subgroup_name(t, k);
                        row.h = t.labels[h];
                        row.chain_index = i;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        detail::verify(found, "primitive idempotent " + prim.labels[idx].name + " has no K^ e_h form");
        row.expected_dimension = dims(row.chain_index);
        row.expected_weight = weight_exp(row.chain_index, false);
        row.printed_weight = weight_exp(row.chain_index, true);
        if (row.printed_weight != row.expected_weight)
            rep.findings.push_back("row i=" + std::to_string(row.chain_index) + ": printed weight " +
                                   std::to_string(row.printed_weight) + " uses -(r-i); computed " + std::to_string(row.weight));
        rep.rows.push_back(std::move(row));
    }
    rep.classes = g_equivalence_classes(a, kDefaultAutBudget, weight_budget).classes.size();
    return rep;
}

}  // namespace gacodes
