#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "advshare/error.hpp"

namespace advshare {

using Fq = std::uint32_t;  // element code in 0..q-1
using Fp = std::uint32_t;  // prime subfield element in 0..p-1

// Arithmetic in GF(p^m) with the polynomial basis {1, x, ..., x^(m-1)}.
//
// An element code e encodes the coefficient vector (e mod p, (e/p) mod p, ...),
// lowest degree first, so codes print directly as the file/CLI integers.
// Multiplication and inversion go through exp/log tables over a generator;
// the field is capped at q <= 2^16 so the tables stay trivial.
//
// Instances are immutable and interned: Field::get returns a reference that
// stays valid for the process lifetime, so subspaces can hold plain pointers.
class Field {
public:
    static constexpr std::uint64_t kMaxQ = 1u << 16;

    static const Field& get(std::uint32_t p, std::uint32_t m);
    static const Field& get(std::uint32_t p, std::uint32_t m, const std::vector<Fp>& modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }

    // Monic modulus coefficients c_0..c_m (c_m = 1); empty when m == 1.
    const std::vector<Fp>& modulus() const noexcept { return modulus_; }

    Fq add(Fq a, Fq b) const {
        if (m_ == 1) {
            Fq s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
    }
    Fq neg(Fq a) const {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_table_[a];
    }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Fq inv(Fq a) const {
        if (a == 0) throw Error("DivisionByZero", "inverse of 0 in GF(" + std::to_string(q_) + ")");
        return exp_[qm1_ - log_[a]];
    }
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    Fq pow_u(Fq a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        const std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % qm1_)) % qm1_;
        return exp_[le];
    }

    // Tr_{q/p}(x) = sum of x^(p^i) for i = 0..m-1; lands in the prime subfield.
    Fp trace(Fq x) const { return trace_[x]; }

    // Gram matrix M of the polynomial basis, M[i][j] = Tr(x^i * x^j), over F_p.
    const std::vector<std::vector<Fp>>& gram() const noexcept { return gram_; }
    const std::vector<std::vector<Fp>>& gram_inv() const noexcept { return gram_inv_; }

    std::vector<Fp> digits(Fq e) const {
        std::vector<Fp> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = e % p_;
            e /= p_;
        }
        return d;
    }
    Fq from_digits(std::span<const Fp> d) const {
        Fq e = 0;
        for (std::size_t i = d.size(); i-- > 0;) e = e * p_ + d[i] % p_;
        return e;
    }

    // The F_p-linear expansion of a symplectic vector (a|b) in F_q^{2n} into
    // F_p^{2mn}: the a-half expands to basis coordinates, the b-half first to
    // basis coordinates and then through M (the inverse of the map the Gram
    // correction applies on compression), so that the F_p-symplectic product
    // equals the trace of the F_q-symplectic product.
    std::vector<Fp> phi_expand(std::span<const Fq> v) const;
    // Inverse of phi_expand (applies M^{-1} on the b-half).
    std::vector<Fq> phi_compress(std::span<const Fp> w) const;

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<Fp> modulus);

    Fq add_slow(Fq a, Fq b) const;

    std::uint32_t p_, m_, q_, qm1_;
    std::vector<Fp> modulus_;
    std::vector<Fq> exp_;   // size 2(q-1): exp_[i] = g^i, doubled to skip the mod
    std::vector<Fq> log_;   // log_[exp_[i]] = i for i in 0..q-2
    std::vector<Fq> neg_table_;
    std::vector<Fq> add_table_;  // only built for q <= 256
    std::vector<Fp> trace_;
    std::vector<std::vector<Fp>> gram_, gram_inv_;
};

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p, used only during table construction.
using Poly = std::vector<Fp>;  // coefficient i = coefficient of x^i; may have trailing zeros

inline std::size_t poly_deg(const Poly& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;  // deg(0) treated as 0
}

inline bool poly_is_zero(const Poly& a) {
    for (Fp c : a)
        if (c != 0) return false;
    return true;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Remainder of a modulo a monic divisor.
inline Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
    const std::size_t dm = poly_deg(monic);
    while (!poly_is_zero(a) && poly_deg(a) >= dm && a.size() > dm) {
        const std::size_t da = poly_deg(a);
        if (a[da] == 0) {
            a.pop_back();
            continue;
        }
        const Fp c = a[da];
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::size_t k = da - dm + i;
            a[k] = (a[k] + p - (c * monic[i]) % p) % p;
        }
    }
    a.resize(dm, 0);
    return a;
}

inline bool poly_irreducible(const Poly& monic, std::uint32_t p) {
    const std::size_t m = poly_deg(monic);
    if (m == 0) return false;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<Fp>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(monic, div, p))) return false;
        }
    }
    return true;
}

}  // namespace detail

inline Field::Field(std::uint32_t p, std::uint32_t m, std::vector<Fp> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!detail::is_prime_u32(p_))
        throw Error("NonPrimeCharacteristic", std::to_string(p_) + " is not prime");
    if (m_ < 1) throw Error("InvalidDegree", "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxQ) throw Error("FieldTooLarge", "p^m exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    qm1_ = q_ - 1;

    if (m_ == 1) {
        modulus_.clear();
    } else {
        if (modulus_.size() != m_ + 1 || modulus_[m_] != 1)
            throw Error("ReducibleModulus", "modulus must be monic of degree m");
        for (Fp& c : modulus_) c %= p_;
        if (!detail::poly_irreducible(modulus_, p_))
            throw Error("ReducibleModulus", "modulus factors over GF(" + std::to_string(p_) + ")");
    }

    neg_table_.resize(q_);
    for (Fq a = 0; a < q_; ++a) {
        Fq r = 0, mult = 1, x = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            const Fp d = x % p_;
            x /= p_;
            r += (d == 0 ? 0 : p_ - d) * mult;
            mult *= p_;
        }
        neg_table_[a] = r;
    }
    if (q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Fq a = 0; a < q_; ++a)
            for (Fq b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
    }

    // exp/log tables over the first generator found by direct order check.
    exp_.assign(2 * qm1_, 0);
    log_.assign(q_, 0);
    auto slow_mul = [&](Fq a, Fq b) -> Fq {
        if (m_ == 1) return (a * b) % p_;
        detail::Poly pa = digits(a), pb = digits(b);
        detail::Poly pr = detail::poly_mod(detail::poly_mul(pa, pb, p_), modulus_, p_);
        return from_digits(pr);
    };
    bool found = false;
    for (Fq g = q_ == 2 ? 1 : 2; g < q_ && !found; ++g) {
        Fq v = 1;
        std::uint32_t i = 0;
        for (; i < qm1_; ++i) {
            exp_[i] = v;
            v = slow_mul(v, g);
            if (v == 1) break;
        }
        found = (i + 1 == qm1_);
    }
    if (!found) throw Error("InternalError", "no generator found");  // unreachable
    for (std::uint32_t i = 0; i < qm1_; ++i) {
        exp_[qm1_ + i] = exp_[i];
        log_[exp_[i]] = i;
    }

    trace_.resize(q_);
    for (Fq x = 0; x < q_; ++x) {
        Fq t = 0, f = x;
        for (std::uint32_t i = 0; i < m_; ++i) {
            t = add(t, f);
            f = pow_u(f, p_);
        }
        if (t >= p_) throw Error("InternalError", "trace left the prime subfield");
        trace_[x] = t;
    }

    gram_.assign(m_, std::vector<Fp>(m_));
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j) {
            // basis element x^i has code p^i
            Fq xi = 1, xj = 1;
            for (std::uint32_t t = 0; t < i; ++t) xi *= p_;
            for (std::uint32_t t = 0; t < j; ++t) xj *= p_;
            gram_[i][j] = trace(mul(xi, xj));
        }

    // Invert the Gram matrix over F_p (it is nonsingular for separable
    // extensions; kept as a hard check).
    {
        const std::uint32_t n = m_;
        std::vector<std::vector<Fp>> a(gram_);
        std::vector<std::vector<Fp>> inv(n, std::vector<Fp>(n, 0));
        for (std::uint32_t i = 0; i < n; ++i) inv[i][i] = 1;
        auto pinv = [&](Fp x) -> Fp {
            Fp r = 1;
            for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
                if (e & 1) r = (r * x) % p_;
                x = (x * x) % p_;
            }
            return p_ == 2 ? x : r;
        };
        for (std::uint32_t col = 0; col < n; ++col) {
            std::uint32_t piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) throw Error("SingularGram", "trace Gram matrix is singular");
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            const Fp s = pinv(a[col][col]);
            for (std::uint32_t j = 0; j < n; ++j) {
                a[col][j] = (a[col][j] * s) % p_;
                inv[col][j] = (inv[col][j] * s) % p_;
            }
            for (std::uint32_t r = 0; r < n; ++r) {
                if (r == col || a[r][col] == 0) continue;
                const Fp f = a[r][col];
                for (std::uint32_t j = 0; j < n; ++j) {
                    a[r][j] = (a[r][j] + p_ * p_ - f * a[col][j] % p_) % p_;
                    inv[r][j] = (inv[r][j] + p_ * p_ - f * inv[col][j] % p_) % p_;
                }
            }
        }
        gram_inv_ = std::move(inv);
    }
}

inline Fq Field::add_slow(Fq a, Fq b) const {
    Fq r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const Fp s = (a % p_ + b % p_) % p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

inline std::vector<Fp> Field::phi_expand(std::span<const Fq> v) const {
    if (v.size() % 2 != 0) throw Error("OddLengthVector", "symplectic vector must have even length");
    const std::size_t n = v.size() / 2;
    std::vector<Fp> out(2 * n * m_);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Fp> da = digits(v[i]);
        for (std::uint32_t j = 0; j < m_; ++j) out[i * m_ + j] = da[j];
        // b-half: coordinates are the basis digits pushed through M,
        // so that compression's M^{-1} recovers them.
        const std::vector<Fp> db = digits(v[n + i]);
        for (std::uint32_t j = 0; j < m_; ++j) {
            Fp acc = 0;
            for (std::uint32_t t = 0; t < m_; ++t) acc = (acc + db[t] * gram_[t][j]) % p_;
            out[(n + i) * m_ + j] = acc;
        }
    }
    return out;
}

inline std::vector<Fq> Field::phi_compress(std::span<const Fp> w) const {
    if (w.size() % (2 * m_) != 0)
        throw Error("OddLengthVector", "expanded vector length must be a multiple of 2m");
    const std::size_t n = w.size() / (2 * m_);
    std::vector<Fq> out(2 * n);
    std::vector<Fp> d(m_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) d[j] = w[i * m_ + j] % p_;
        out[i] = from_digits(d);
        for (std::uint32_t j = 0; j < m_; ++j) {
            Fp acc = 0;
            for (std::uint32_t t = 0; t < m_; ++t) acc = (acc + (w[(n + i) * m_ + t] % p_) * gram_inv_[t][j]) % p_;
            d[j] = acc;
        }
        out[n + i] = from_digits(d);
    }
    return out;
}

inline const Field& Field::get(std::uint32_t p, std::uint32_t m, const std::vector<Fp>& modulus) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<Fp>>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, m == 1 ? std::vector<Fp>{} : modulus);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, m, std::get<2>(key)))).first;
    return *it->second;
}

inline const Field& Field::get(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return get(p, 1, {});
    if (!detail::is_prime_u32(p))
        throw Error("NonPrimeCharacteristic", std::to_string(p) + " is not prime");
    // Default modulus: the lexicographically least monic irreducible, where
    // candidates are ordered by the base-p integer encoding of their non-leading
    // coefficients (lowest degree first). Pinning this makes file formats and
    // tests reproducible across implementations.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        count *= p;
        if (count > kMaxQ) throw Error("FieldTooLarge", "p^m exceeds 2^16");
    }
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Fp> mod(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            mod[i] = static_cast<Fp>(c % p);
            c /= p;
        }
        mod[m] = 1;
        if (detail::poly_irreducible(mod, p)) return get(p, m, mod);
    }
    throw Error("InternalError", "no irreducible polynomial found");  // unreachable
}

// Field of given order with the default modulus; q must be a prime power.
inline const Field& field_of_order(std::uint32_t q) {
    if (q < 2) throw Error("NonPrimeCharacteristic", "q must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) {
        ++p;
        if (static_cast<std::uint64_t>(p) * p > q) {
            p = q;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw Error("NonPrimeCharacteristic", std::to_string(q) + " is not a prime power");
    return Field::get(p, m);
}

}  // namespace advshare
