#pragma once

// Exact arithmetic in F_p and F_{p^m}.
//
// Field / FieldElement use a polynomial basis over the prime field and work for
// any extension degree below the bit cap; they carry the splitting fields used by
// the character machinery. SmallField is a table-driven view of a field with at
// most 2^16 elements whose values are plain integer indices; it is the
// coefficient ring of every group algebra over a base field.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "detail/arith.hpp"
#include "error.hpp"

namespace gacodes {

using BigInt = boost::multiprecision::cpp_int;

/// Largest field order accepted, in bits of log2(p^m).
inline constexpr unsigned kMaxFieldBits = 1024;

/// Least t >= 1 with q^t = 1 (mod n).
inline std::uint64_t order_mod(std::uint64_t q, std::uint64_t n) {
    detail::require(n >= 2, "order_mod: modulus must be at least 2");
    detail::require(std::gcd(q % n, n) == 1, "order_mod: gcd(q, n) != 1");
    std::uint64_t phi = n;
    for (auto [p, e] : detail::factorize(n)) phi = phi / p * (p - 1);
    // the order divides phi(n); strip prime factors while the power stays 1
    std::uint64_t t = phi;
    for (auto [r, e] : detail::factorize(phi)) {
        for (unsigned i = 0; i < e && t % r == 0 && detail::pow_mod(q, t / r, n) == 1; ++i) t /= r;
    }
    return t;
}

namespace detail {

using Poly = std::vector<u64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    if (p <= 65536) {
        // products fit in 32 bits, so a 64-bit accumulator never overflows here
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
            if ((i & 0xfff) == 0xfff)
                for (auto& x : r) x %= p;
        }
        for (auto& x : r) x %= p;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

/// Remainder of a modulo the monic polynomial f.
inline Poly poly_mod(Poly a, const Poly& f, u64 p) {
    const std::size_t m = f.size() - 1;
    trim(a);
    while (a.size() > m) {
        u64 c = a.back();
        std::size_t shift = a.size() - 1 - m;
        if (c) {
            for (std::size_t j = 0; j < m; ++j) {
                if (f[j]) a[shift + j] = (a[shift + j] + p - mul_mod(c, f[j], p)) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly poly_monic(Poly a, u64 p) {
    trim(a);
    if (a.empty()) return a;
    u64 inv = mod_inverse(a.back(), p);
    for (auto& x : a) x = mul_mod(x, inv, p);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly bm = poly_monic(b, p);
        Poly r = poly_mod(std::move(a), bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

inline Poly poly_powmod(Poly base, const BigInt& e, const Poly& f, u64 p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        r = poly_mod(poly_mul(r, r, p), f, p);
        if (boost::multiprecision::bit_test(e, i)) r = poly_mod(poly_mul(r, base, p), f, p);
    }
    return r;
}

/// Ben-Or test: a monic f of degree m is irreducible iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= m/2.
inline bool is_irreducible(const Poly& f, u64 p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= m / 2; ++i) {
        h = poly_powmod(h, BigInt(p), f, p);
        if (poly_gcd(f, poly_sub(h, x, p), p).size() != 1) return false;
    }
    return true;
}

struct FieldData {
    u64 p = 0;
    unsigned m = 0;
    Poly modulus;  // monic, size m + 1
    BigInt order;
};

}  // namespace detail

class FieldElement;

/// F_{p^m} in a polynomial basis. Cheap to copy; all copies share one immutable descriptor.
class Field {
public:
    Field() = default;

    std::uint64_t characteristic() const { return data_->p; }
    unsigned degree() const { return data_->m; }
    const BigInt& order() const { return data_->order; }
    /// Monic modulus, little-endian coefficients, size degree()+1.
    const std::vector<std::uint64_t>& modulus() const { return data_->modulus; }

    bool valid() const { return data_ != nullptr; }

    /// Order as a 64-bit integer; throws when it does not fit.
    std::uint64_t order_u64() const {
        detail::require(data_->order <= BigInt(UINT64_MAX), "field order exceeds 64 bits");
        return static_cast<std::uint64_t>(data_->order);
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long n) const;
    FieldElement element(std::vector<std::uint64_t> coeffs) const;
    /// The index-th element in the fixed enumeration (base-p digits of index are the coefficients).
    FieldElement from_index(std::uint64_t index) const;
    /// The polynomial variable x, i.e. the class of x modulo the modulus.
    FieldElement generator_x() const;

    std::string name() const {
        std::ostringstream os;
        os << "F" << data_->order;
        return os.str();
    }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
    }

    const detail::FieldData& data() const { return *data_; }

    friend Field make_extension(std::uint64_t p, unsigned m);

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field f, std::vector<std::uint64_t> c) : field_(std::move(f)), c_(std::move(c)) {}

    const Field& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto x : c_)
            if (x) return false;
        return true;
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i]) return false;
        return true;
    }
    /// True when the element lies in the prime subfield (all non-constant coordinates vanish).
    bool in_prime_field() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i]) return false;
        return true;
    }

    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        const auto p = field_.characteristic();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
            if (c_[i] >= p) c_[i] -= p;
        }
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        const auto p = field_.characteristic();
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        check_same(o);
        const auto& d = field_.data();
        auto r = detail::poly_mod(detail::poly_mul(c_, o.c_, d.p), d.modulus, d.p);
        r.resize(d.m, 0);
        c_ = std::move(r);
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const { return field_.zero() - *this; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.c_ == b.c_ && a.field_ == b.field_;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against the modulus.
    FieldElement inverse() const {
        detail::require(!is_zero(), "inverse of zero");
        const auto& d = field_.data();
        const auto p = d.p;
        detail::Poly r0 = d.modulus, r1 = c_, s0{}, s1{1};
        detail::trim(r1);
        while (r1.size() > 1) {
            // r0 = qt * r1 + rem
            detail::Poly rem = r0, qt(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
            const auto lead_inv = detail::mod_inverse(r1.back(), p);
            while (rem.size() >= r1.size()) {
                auto c = detail::mul_mod(rem.back(), lead_inv, p);
                auto shift = rem.size() - r1.size();
                qt[shift] = c;
                for (std::size_t j = 0; j < r1.size(); ++j)
                    rem[shift + j] = (rem[shift + j] + p - detail::mul_mod(c, r1[j], p)) % p;
                detail::trim(rem);
                if (rem.empty()) break;
            }
            detail::trim(qt);
            auto s2 = detail::poly_sub(s0, detail::poly_mul(qt, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant because the modulus is irreducible
        const auto inv = detail::mod_inverse(r1[0], p);
        for (auto& x : s1) x = detail::mul_mod(x, inv, p);
        s1 = detail::poly_mod(std::move(s1), d.modulus, p);
        s1.resize(d.m, 0);
        return {field_, std::move(s1)};
    }

    FieldElement pow(const BigInt& e) const {
        const auto& d = field_.data();
        auto r = detail::poly_powmod(c_, e, d.modulus, d.p);
        r.resize(d.m, 0);
        return {field_, std::move(r)};
    }
    FieldElement pow(std::uint64_t e) const { return pow(BigInt(e)); }

    std::string to_string() const {
        std::ostringstream os;
        if (c_.size() == 1) {
            os << c_[0];
            return os.str();
        }
        os << '[';
        for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << ']';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

private:
    void check_same(const FieldElement& o) const {
        if (!(field_ == o.field_)) throw PreconditionError("field elements belong to different fields");
    }

    Field field_;
    std::vector<std::uint64_t> c_;
};

inline FieldElement Field::zero() const { return {*this, std::vector<std::uint64_t>(data_->m, 0)}; }
inline FieldElement Field::one() const { return from_int(1); }
inline FieldElement Field::from_int(long long n) const {
    std::vector<std::uint64_t> c(data_->m, 0);
    const auto p = static_cast<long long>(data_->p);
    c[0] = static_cast<std::uint64_t>(((n % p) + p) % p);
    return {*this, std::move(c)};
}
inline FieldElement Field::element(std::vector<std::uint64_t> coeffs) const {
    detail::require(coeffs.size() <= data_->m, "too many coefficients for field degree");
    coeffs.resize(data_->m, 0);
    for (auto& x : coeffs) x %= data_->p;
    return {*this, std::move(coeffs)};
}
inline FieldElement Field::from_index(std::uint64_t index) const {
    std::vector<std::uint64_t> c(data_->m, 0);
    for (unsigned i = 0; i < data_->m && index; ++i) {
        c[i] = index % data_->p;
        index /= data_->p;
    }
    return {*this, std::move(c)};
}
inline FieldElement Field::generator_x() const {
    if (data_->m == 1) return from_int(static_cast<long long>((data_->p - data_->modulus[0]) % data_->p));
    std::vector<std::uint64_t> c(data_->m, 0);
    c[1] = 1;
    return {*this, std::move(c)};
}

/// F_{p^m} with the lexicographically first monic irreducible modulus.
///
/// Candidates x^m + c_{m-1}x^{m-1} + ... + c_0 are scanned with (c_{m-1}, ..., c_0)
/// counting upward from zero; m = 1 therefore yields the modulus x. Results are
/// memoised, so repeated calls return the same shared descriptor.
inline Field make_extension(std::uint64_t p, unsigned m) {
    detail::require(detail::is_prime(p), "make_extension: characteristic " + std::to_string(p) + " is not prime");
    detail::require(p < (1ULL << 32), "make_extension: characteristic must be below 2^32");
    detail::require(m >= 1, "make_extension: degree must be positive");
    BigInt order = boost::multiprecision::pow(BigInt(p), m);
    detail::require(boost::multiprecision::msb(order) < kMaxFieldBits,
                    "make_extension: p^m exceeds the " + std::to_string(kMaxFieldBits) + "-bit field budget");

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, Field> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }

    detail::Poly f(m + 1, 0);
    f[m] = 1;
    for (;;) {
        if (detail::is_irreducible(f, p)) break;
        // increment (c_0 least significant) to walk the lexicographic order of (c_{m-1}, ..., c_0)
        std::size_t i = 0;
        while (i < m && ++f[i] == p) f[i++] = 0;
        detail::require(i < m, "make_extension: no irreducible polynomial found");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->m = m;
    data->modulus = std::move(f);
    data->order = std::move(order);
    Field field(std::move(data));

    std::lock_guard lock(mu);
    return cache.emplace(std::pair{p, m}, field).first->second;
}

/// Multiplicative order of x; requires |F| - 1 to fit in 64 bits so it can be factored.
inline std::uint64_t element_order(const FieldElement& x) {
    detail::require(!x.is_zero(), "element_order: zero has no multiplicative order");
    const auto n = x.field().order_u64() - 1;
    std::uint64_t t = n;
    for (auto [r, e] : detail::factorize(n)) {
        for (unsigned i = 0; i < e && x.pow(t / r).is_one(); ++i) t /= r;
    }
    return t;
}

/// First element, in enumeration order, whose (q-1)/e-th power has order exactly e.
inline FieldElement primitive_root_of_unity(const Field& f, std::uint64_t e) {
    detail::require(e >= 1, "primitive_root_of_unity: order must be positive");
    const BigInt qm1 = f.order() - 1;
    if (qm1 % e != 0)
        throw PreconditionError("primitive_root_of_unity: " + std::to_string(e) + " does not divide |" + f.name() +
                                "| - 1; the field is not a splitting field");
    const BigInt cofactor = qm1 / e;
    const auto primes = detail::prime_divisors(e);
    for (std::uint64_t idx = 1;; ++idx) {
        auto y = f.from_index(idx).pow(cofactor);
        if (y.is_zero()) continue;
        bool exact = true;
        for (auto r : primes) {
            if (y.pow(e / r).is_one()) {
                exact = false;
                break;
            }
        }
        if (exact) return y;
    }
}

/// Table-driven arithmetic for fields with at most 2^16 elements. Values are indices:
/// the index of an element is sum c_i p^i over its polynomial-basis coordinates, so
/// 0 is zero and 1 is one.
class SmallField {
public:
    using value_type = std::uint32_t;

    SmallField() = default;
    explicit SmallField(Field f) : field_(std::move(f)) {
        const auto q = field_.order();
        detail::require(q <= 65536, "SmallField: field order above 2^16");
        q_ = static_cast<std::uint32_t>(q);
        p_ = static_cast<std::uint32_t>(field_.characteristic());
        m_ = field_.degree();
        if (m_ == 1) return;
        // log/exp tables from a primitive element
        auto g = primitive_root_of_unity(field_, q_ - 1);
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        auto x = field_.one();
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            auto idx = index_of(x);
            exp_[k] = exp_[k + q_ - 1] = idx;
            log_[idx] = k;
            x *= g;
        }
        if (p_ != 2 && q_ <= 256) {
            add_.resize(std::size_t(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b) add_[std::size_t(a) * q_ + b] = digit_add(a, b);
        }
    }

    static SmallField prime(std::uint64_t p) { return SmallField(make_extension(p, 1)); }
    static SmallField of_order(std::uint64_t q) {
        auto [p, k] = detail::prime_power(q);
        if (p == 0) throw PreconditionError("field order " + std::to_string(q) + " is not a prime power");
        return SmallField(make_extension(p, k));
    }

    const Field& field() const { return field_; }
    std::uint32_t size() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::string name() const { return "F" + std::to_string(q_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_unit(value_type a) const { return a != 0; }

    value_type from_int(long long n) const {
        const long long p = p_;
        return static_cast<value_type>(((n % p) + p) % p);
    }

    value_type add(value_type a, value_type b) const {
        if (m_ == 1) {
            auto s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
        return digit_add(a, b);
    }
    value_type neg(value_type a) const {
        if (m_ == 1) return a ? p_ - a : 0;
        if (p_ == 2) return a;
        value_type r = 0, scale = 1;
        while (a) {
            auto d = a % p_;
            r += (d ? p_ - d : 0) * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const {
        if (m_ == 1) return static_cast<value_type>(std::uint64_t(a) * b % p_);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    value_type inv(value_type a) const {
        detail::require(a != 0, "inverse of zero");
        if (m_ == 1) return static_cast<value_type>(detail::mod_inverse(a, p_));
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    value_type pow(value_type a, std::uint64_t e) const {
        value_type r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement to_element(value_type a) const { return field_.from_index(a); }
    value_type from_element(const FieldElement& x) const {
        detail::require(x.field() == field_, "SmallField: element of a different field");
        return index_of(x);
    }

    std::string to_string(value_type a) const {
        if (m_ == 1) return std::to_string(a);
        return to_element(a).to_string();
    }
    long long to_integer(value_type a) const { return a; }

    friend bool operator==(const SmallField& a, const SmallField& b) { return a.field_ == b.field_; }

private:
    value_type index_of(const FieldElement& x) const {
        std::uint64_t idx = 0;
        const auto& c = x.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) idx = idx * field_.characteristic() + c[i];
        return static_cast<value_type>(idx);
    }
    value_type digit_add(value_type a, value_type b) const {
        value_type r = 0, scale = 1;
        while (a || b) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    Field field_;
    std::uint32_t q_ = 0, p_ = 0;
    unsigned m_ = 0;
    std::vector<value_type> exp_, log_, add_;
};

}  // namespace gacodes
