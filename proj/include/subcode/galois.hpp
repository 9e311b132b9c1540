#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace subcode {

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p, little-endian coefficient vectors.
using Poly = std::vector<unsigned>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c);
    return c;
}

// Remainder of a modulo monic b.
inline Poly poly_rem(Poly a, const Poly& b, unsigned p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            unsigned s = (lead * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - s) % p;
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace detail

/// Finite field F_q, q = p^e. Elements are canonical integers in {0..q-1},
/// read base-p as polynomial coefficients (digit i = coefficient of x^i).
/// Immutable after construction; all operations are pure.
class FieldSpec {
public:
    explicit FieldSpec(unsigned p, unsigned e = 1) : p_(p), e_(e) {
        if (!detail::is_prime(p)) throw std::invalid_argument("FieldSpec: p must be prime");
        if (e < 1) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
            if (q > (1u << 16)) throw std::invalid_argument("FieldSpec: field order too large");
        }
        q_ = q;
        if (e > 1) modulus_ = find_modulus(p, e);
        if (q_ <= kTableCap) build_tables();
    }

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint64_t order() const { return q_; }

    /// Monic irreducible modulus (e+1 coefficients, little-endian); empty for prime fields.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    unsigned add(unsigned a, unsigned b) const {
        if (e_ == 1) return (a + b) % p_;
        unsigned r = 0, scale = 1;
        for (unsigned i = 0; i < e_; ++i) {
            unsigned da = (a / scale) % p_, db = (b / scale) % p_;
            r += ((da + db) % p_) * scale;
            scale *= p_;
        }
        return r;
    }

    unsigned neg(unsigned a) const {
        if (e_ == 1) return (p_ - a % p_) % p_;
        unsigned r = 0, scale = 1;
        for (unsigned i = 0; i < e_; ++i) {
            unsigned da = (a / scale) % p_;
            r += ((p_ - da) % p_) * scale;
            scale *= p_;
        }
        return r;
    }

    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

    unsigned mul(unsigned a, unsigned b) const {
        if (tables_) return tables_->mul[a * q_ + b];
        return mul_slow(a, b);
    }

    unsigned inv(unsigned a) const {
        if (a == 0) throw std::domain_error("FieldSpec: inverse of zero");
        if (tables_) return tables_->inv[a];
        return pow_elem(a, q_ - 2);
    }

    unsigned pow_elem(unsigned a, std::uint64_t k) const {
        unsigned r = 1;
        while (k) {
            if (k & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            k >>= 1;
        }
        return r;
    }

private:
    static constexpr std::uint64_t kTableCap = 256;

    struct Tables {
        std::vector<std::uint16_t> mul;
        std::vector<std::uint16_t> inv;
    };

    detail::Poly to_poly(unsigned v) const {
        detail::Poly d;
        while (v) {
            d.push_back(v % p_);
            v /= p_;
        }
        return d;
    }

    unsigned from_poly(const detail::Poly& d) const {
        unsigned v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
        return v;
    }

    unsigned mul_slow(unsigned a, unsigned b) const {
        if (e_ == 1) return (a * b) % p_;
        detail::Poly prod = detail::poly_mul(to_poly(a), to_poly(b), p_);
        return from_poly(detail::poly_rem(std::move(prod), modulus_, p_));
    }

    void build_tables() {
        auto t = std::make_shared<Tables>();
        t->mul.resize(q_ * q_);
        t->inv.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                unsigned r = mul_slow(a, b);
                t->mul[a * q_ + b] = static_cast<std::uint16_t>(r);
                if (r == 1) t->inv[a] = static_cast<std::uint16_t>(b);
            }
        tables_ = std::move(t);
    }

    // Lowest monic irreducible of degree e, candidates ordered by base-p value
    // of the low coefficients. Irreducibility by trial division against every
    // monic polynomial of degree <= e/2.
    static std::vector<unsigned> find_modulus(unsigned p, unsigned e) {
        std::uint64_t span = 1;
        for (unsigned i = 0; i < e; ++i) span *= p;
        for (std::uint64_t v = 0; v < span; ++v) {
            detail::Poly f(e + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < e; ++i) {
                f[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            f[e] = 1;
            if (is_irreducible(f, p, e)) return f;
        }
        throw std::logic_error("FieldSpec: no irreducible modulus found");
    }

    static bool is_irreducible(const detail::Poly& f, unsigned p, unsigned e) {
        for (unsigned dg = 1; dg <= e / 2; ++dg) {
            std::uint64_t span = 1;
            for (unsigned i = 0; i < dg; ++i) span *= p;
            for (std::uint64_t v = 0; v < span; ++v) {
                detail::Poly g(dg + 1, 0);
                std::uint64_t t = v;
                for (unsigned i = 0; i < dg; ++i) {
                    g[i] = static_cast<unsigned>(t % p);
                    t /= p;
                }
                g[dg] = 1;
                if (detail::poly_rem(f, g, p).empty()) return false;
            }
        }
        return true;
    }

    unsigned p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<unsigned> modulus_;
    std::shared_ptr<const Tables> tables_;
};

/// Builds the field of the given prime-power order.
inline FieldSpec field_from_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field_from_order: order must be >= 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw std::invalid_argument("field_from_order: not a prime power");
    return FieldSpec(p, e);
}

}  // namespace subcode
