#pragma once

// The group ring R[G] as dense coefficient vectors indexed by a GroupTable.
//
// R is any coefficient ring offering value_type, zero(), one(), add, sub, neg,
// mul, is_zero, from_int, is_unit, inv and to_string; SmallField and ZModRing
// both qualify.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "groups.hpp"

namespace gacodes {

template <class R>
class AlgebraElement;

template <class R>
class GroupAlgebra : public std::enable_shared_from_this<GroupAlgebra<R>> {
public:
    using value_type = typename R::value_type;

    static std::shared_ptr<const GroupAlgebra> make(std::shared_ptr<const GroupTable> table, R ring) {
        return std::shared_ptr<const GroupAlgebra>(new GroupAlgebra(std::move(table), std::move(ring)));
    }

    const GroupTable& group() const { return *table_; }
    std::shared_ptr<const GroupTable> group_ptr() const { return table_; }
    const R& ring() const { return ring_; }
    std::size_t dimension() const { return table_->order; }

    AlgebraElement<R> zero() const { return AlgebraElement<R>(this->shared_from_this()); }
    AlgebraElement<R> one() const { return basis(0); }
    AlgebraElement<R> basis(std::uint32_t g, value_type c) const {
        auto e = zero();
        e.set(g, c);
        return e;
    }
    AlgebraElement<R> basis(std::uint32_t g) const { return basis(g, ring_.one()); }
    AlgebraElement<R> from_coeffs(std::vector<value_type> c) const {
        detail::require(c.size() == table_->order, "coefficient vector length differs from |G|");
        return AlgebraElement<R>(this->shared_from_this(), std::move(c));
    }

    /// The averaged subgroup sum (1/|H|) * sum of H; requires |H| to be a unit of R.
    AlgebraElement<R> hat(const Subgroup& h) const {
        const auto n = ring_.from_int(static_cast<long long>(h.order()));
        if (!ring_.is_unit(n))
            throw PreconditionError("hat: |H| = " + std::to_string(h.order()) + " is not invertible in " + ring_.name());
        const auto c = ring_.inv(n);
        auto e = zero();
        for (auto x : h.elements) e.set(x, c);
        return e;
    }
    AlgebraElement<R> hat_of(std::uint32_t g) const { return hat(generate_subgroup(*table_, {g})); }

private:
    GroupAlgebra(std::shared_ptr<const GroupTable> t, R r) : table_(std::move(t)), ring_(std::move(r)) {}
    std::shared_ptr<const GroupTable> table_;
    R ring_;
};

template <class R>
class AlgebraElement {
public:
    using value_type = typename R::value_type;
    using Algebra = GroupAlgebra<R>;

    AlgebraElement() = default;
    explicit AlgebraElement(std::shared_ptr<const Algebra> a)
        : alg_(std::move(a)), c_(alg_->dimension(), alg_->ring().zero()) {}
    AlgebraElement(std::shared_ptr<const Algebra> a, std::vector<value_type> c) : alg_(std::move(a)), c_(std::move(c)) {}

    const Algebra& algebra() const { return *alg_; }
    std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
    const std::vector<value_type>& coeffs() const { return c_; }
    value_type operator[](std::uint32_t g) const { return c_[g]; }
    void set(std::uint32_t g, value_type v) { c_[g] = v; }
    std::size_t size() const { return c_.size(); }

    bool is_zero() const {
        const auto& r = alg_->ring();
        return std::all_of(c_.begin(), c_.end(), [&](auto x) { return r.is_zero(x); });
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        same(o);
        const auto& r = alg_->ring();
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = r.add(c_[i], o.c_[i]);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        same(o);
        const auto& r = alg_->ring();
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = r.sub(c_[i], o.c_[i]);
        return *this;
    }
    AlgebraElement operator-() const {
        AlgebraElement r = *this;
        for (auto& x : r.c_) x = alg_->ring().neg(x);
        return r;
    }
    AlgebraElement scaled(value_type s) const {
        AlgebraElement r = *this;
        for (auto& x : r.c_) x = alg_->ring().mul(s, x);
        return r;
    }

    /// Convolution through the group multiplication table, skipping zero coefficients.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.same(b);
        const auto& r = a.alg_->ring();
        const auto& t = a.alg_->group();
        AlgebraElement out(a.alg_);
        std::vector<std::uint32_t> nzb;
        for (std::uint32_t j = 0; j < b.c_.size(); ++j)
            if (!r.is_zero(b.c_[j])) nzb.push_back(j);
        for (std::uint32_t i = 0; i < a.c_.size(); ++i) {
            if (r.is_zero(a.c_[i])) continue;
            for (auto j : nzb) {
                auto k = t.mul(i, j);
                out.c_[k] = r.add(out.c_[k], r.mul(a.c_[i], b.c_[j]));
            }
        }
        return out;
    }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.c_ == b.c_; }
    friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) { return a.c_ < b.c_; }

    /// g * this, i.e. the coefficient of g*h is this[h].
    AlgebraElement left_shift(std::uint32_t g) const {
        AlgebraElement out(alg_);
        const auto& t = alg_->group();
        for (std::uint32_t h = 0; h < c_.size(); ++h) out.c_[t.mul(g, h)] = c_[h];
        return out;
    }

    std::size_t weight() const {
        const auto& r = alg_->ring();
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [&](auto x) { return !r.is_zero(x); }));
    }
    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> s;
        for (std::uint32_t i = 0; i < c_.size(); ++i)
            if (!alg_->ring().is_zero(c_[i])) s.push_back(i);
        return s;
    }

    bool is_idempotent() const { return *this * *this == *this; }
    /// Commutes with every group generator, hence with the whole algebra.
    bool is_central() const {
        for (auto g : alg_->group().generators) {
            auto x = alg_->basis(g);
            if (!(x * *this == *this * x)) return false;
        }
        return true;
    }
    bool is_orthogonal(const AlgebraElement& o) const { return (*this * o).is_zero() && (o * *this).is_zero(); }

    /// The classical involution: coefficient of g becomes the coefficient of g^{-1}.
    AlgebraElement involution() const {
        AlgebraElement out(alg_);
        const auto& t = alg_->group();
        for (std::uint32_t g = 0; g < c_.size(); ++g) out.c_[t.inv(g)] = c_[g];
        return out;
    }

    /// "c*[e1,e2] + ..." with exponent-vector group elements; "0" for the zero element.
    std::string to_string() const {
        const auto& r = alg_->ring();
        const auto& t = alg_->group();
        std::string s;
        for (std::uint32_t g = 0; g < c_.size(); ++g) {
            if (r.is_zero(c_[g])) continue;
            if (!s.empty()) s += " + ";
            s += r.to_string(c_[g]) + "*[";
            for (std::size_t i = 0; i < t.coords[g].size(); ++i) s += (i ? "," : "") + std::to_string(t.coords[g][i]);
            s += "]";
        }
        return s.empty() ? "0" : s;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (auto x : c_) arr.push_back(alg_->ring().to_integer(x));
        return arr;
    }

private:
    void same(const AlgebraElement& o) const {
        if (alg_ != o.alg_ && !(alg_ && o.alg_ && &alg_->group() == &o.alg_->group() && alg_->ring() == o.alg_->ring()))
            throw PreconditionError("algebra elements belong to different algebras");
    }

    std::shared_ptr<const Algebra> alg_;
    std::vector<value_type> c_;
};

using FieldAlgebra = GroupAlgebra<SmallField>;
using FieldElementVec = AlgebraElement<SmallField>;

/// An abelian group together with its group algebra over a small field.
struct AbelianAlgebra {
    AbelianGroup group;
    SmallField field;
    std::shared_ptr<const FieldAlgebra> algebra;

    const GroupTable& table() const { return algebra->group(); }
};

inline AbelianAlgebra make_abelian_algebra(const AbelianGroup& g, const SmallField& f) {
    return AbelianAlgebra{g, f, FieldAlgebra::make(g.table(), f)};
}

inline AbelianAlgebra make_abelian_algebra(const std::string& group, std::uint64_t q) {
    return make_abelian_algebra(AbelianGroup::parse(group), SmallField::of_order(q));
}

}  // namespace gacodes
