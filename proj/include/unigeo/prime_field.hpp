#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "rational_field.hpp"

namespace unigeo {

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            acc = mulmod64(acc, base, p);
        base = mulmod64(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin; this base set decides primality for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

}  // namespace detail

// Residue with its modulus attached; mixing moduli is a programming error,
// not a data error, hence the asserts.
struct Fp {
    std::uint64_t v{0};
    std::uint64_t p{0};

    friend Fp operator+(Fp a, Fp b) {
        assert(a.p == b.p && a.p != 0);
        std::uint64_t s = a.v + b.v;
        if (s >= a.p)
            s -= a.p;
        return {s, a.p};
    }
    friend Fp operator-(Fp a, Fp b) {
        assert(a.p == b.p && a.p != 0);
        return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
    }
    Fp operator-() const {
        assert(p != 0);
        return {v == 0 ? 0 : p - v, p};
    }
    friend Fp operator*(Fp a, Fp b) {
        assert(a.p == b.p && a.p != 0);
        return {detail::mulmod64(a.v, b.v, a.p), a.p};
    }
    friend Fp operator/(Fp a, Fp b) {
        assert(a.p == b.p && a.p != 0);
        if (b.v == 0)
            throw Error(ErrorCode::DivisionByZero, "division by zero residue mod " + std::to_string(a.p));
        return {detail::mulmod64(a.v, detail::powmod64(b.v, a.p - 2, a.p), a.p), a.p};
    }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }

// Z/pZ for an odd prime p. The modulus is validated once here; characteristic
// two is rejected because the formulas divide by 2 and 4 throughout.
class PrimeField {
public:
    using Scalar = Fp;

    static constexpr bool is_exact = true;
    static constexpr bool is_finite = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p == 2)
            throw Error(ErrorCode::CharacteristicTwo, "characteristic 2 is excluded");
        if (p >= (1ull << 62))
            throw Error(ErrorCode::UnsupportedField, "modulus must be below 2^62");
        if (!detail::is_prime_u64(p))
            throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Scalar zero() const { return {0, p_}; }
    Scalar one() const { return {1, p_}; }

    Scalar from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0)
            m += static_cast<long long>(p_);
        return {static_cast<std::uint64_t>(m), p_};
    }

    Scalar from_bigint(const BigInt& v) const {
        BigInt m = v % p_;
        if (m < 0)
            m += p_;
        return {m.template convert_to<std::uint64_t>(), p_};
    }

    // "n" or "a/b", reduced mod p; the quotient form uses the field inverse.
    Scalar parse(std::string_view text) const {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return from_bigint(detail::parse_bigint(text));
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw Error(ErrorCode::ParseError, "more than one '/' in '" + std::string(text) + "'");
        Scalar num = from_bigint(detail::parse_bigint(text.substr(0, slash)));
        Scalar den = from_bigint(detail::parse_bigint(text.substr(slash + 1)));
        return num / den;
    }

    std::string str(const Scalar& x) const { return std::to_string(x.v); }

    // Both roots when x is a square, smaller representative first.
    // Small moduli are scanned outright; larger ones go through Tonelli-Shanks.
    std::optional<std::pair<Scalar, Scalar>> sqrt(const Scalar& x) const {
        assert(x.p == p_);
        if (x.v == 0)
            return std::pair{zero(), zero()};
        if (detail::powmod64(x.v, (p_ - 1) / 2, p_) != 1)
            return std::nullopt;
        std::uint64_t r = 0;
        if (p_ < 65536) {
            for (std::uint64_t c = 1; c < p_; ++c) {
                if (detail::mulmod64(c, c, p_) == x.v) {
                    r = c;
                    break;
                }
            }
        } else {
            r = tonelli_shanks(x.v);
        }
        std::uint64_t other = p_ - r;
        if (r > other)
            std::swap(r, other);
        return std::pair{Scalar{r, p_}, Scalar{other, p_}};
    }

    std::string name() const { return "prime:" + std::to_string(p_); }

private:
    std::uint64_t tonelli_shanks(std::uint64_t n) const {
        if (p_ % 4 == 3)
            return detail::powmod64(n, (p_ + 1) / 4, p_);
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (detail::powmod64(z, (p_ - 1) / 2, p_) != p_ - 1)
            ++z;
        std::uint64_t m = static_cast<std::uint64_t>(s);
        std::uint64_t c = detail::powmod64(z, q, p_);
        std::uint64_t t = detail::powmod64(n, q, p_);
        std::uint64_t r = detail::powmod64(n, (q + 1) / 2, p_);
        while (t != 1) {
            std::uint64_t i = 0;
            std::uint64_t probe = t;
            while (probe != 1) {
                probe = detail::mulmod64(probe, probe, p_);
                ++i;
            }
            std::uint64_t b = c;
            for (std::uint64_t k = 0; k + i + 1 < m; ++k)
                b = detail::mulmod64(b, b, p_);
            m = i;
            c = detail::mulmod64(b, b, p_);
            t = detail::mulmod64(t, c, p_);
            r = detail::mulmod64(r, b, p_);
        }
        return r;
    }

    std::uint64_t p_;
};

}  // namespace unigeo
