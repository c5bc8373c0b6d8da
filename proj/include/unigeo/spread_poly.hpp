#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational_field.hpp"

namespace unigeo {

// Dense univariate polynomial over the integers, coefficients ascending by
// degree, trailing zeros trimmed. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

    static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
    static IntPoly variable() { return IntPoly({BigInt(0), BigInt(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly compose(const IntPoly& inner) const {
        IntPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * inner + constant(c_[i]);
        return acc;
    }

    // Long division that must terminate with zero remainder and exact
    // coefficient quotients; anything else is an error here, because the
    // callers rely on divisibility theorems.
    IntPoly divide_exact(const IntPoly& d) const {
        if (d.is_zero())
            throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
        if (is_zero())
            return {};
        if (degree() < d.degree())
            throw Error(ErrorCode::InexactDivision, "degree of divisor exceeds dividend");
        std::vector<BigInt> rem = c_;
        std::vector<BigInt> quot(c_.size() - d.c_.size() + 1, BigInt(0));
        const BigInt& lead = d.c_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            BigInt top = rem[k + d.c_.size() - 1];
            if (top.is_zero())
                continue;
            if (top % lead != 0)
                throw Error(ErrorCode::InexactDivision, "leading coefficient does not divide");
            BigInt q = top / lead;
            quot[k] = q;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                rem[k + j] -= q * d.c_[j];
        }
        for (const auto& r : rem)
            if (!r.is_zero())
                throw Error(ErrorCode::InexactDivision, "nonzero remainder");
        return IntPoly(std::move(quot));
    }

    template <class F>
    typename F::Scalar eval(const F& K, const typename F::Scalar& x) const {
        auto acc = K.zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + K.from_bigint(c_[i]);
        return acc;
    }

    // Descending-degree rendering, e.g. "16*s^2 - 24*s + 9".
    std::string str(const std::string& var) const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& c = c_[i];
            if (c.is_zero())
                continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            bool unit = mag == 1 && i > 0;
            if (!unit)
                out += mag.str();
            if (i > 0) {
                if (!unit)
                    out += '*';
                out += var;
                if (i > 1)
                    out += '^' + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// n-th spread polynomial: S_0 = 0, S_1 = s,
// S_n = 2(1 - 2s) S_{n-1} - S_{n-2} + 2s.
inline IntPoly spread_poly(std::size_t n) {
    IntPoly prev;                    // S_0
    IntPoly cur = IntPoly::variable();  // S_1
    if (n == 0)
        return prev;
    IntPoly mult({BigInt(2), BigInt(-4)});  // 2 - 4s
    IntPoly shift({BigInt(0), BigInt(2)});  // 2s
    for (std::size_t k = 2; k <= n; ++k) {
        IntPoly next = mult * cur - prev + shift;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <class F>
typename F::Scalar spread_poly_eval(const F& K, std::size_t n, const typename F::Scalar& s) {
    return spread_poly(n).eval(K, s);
}

// n-th Chebyshev polynomial of the first kind.
inline IntPoly chebyshev_poly(std::size_t n) {
    IntPoly prev = IntPoly::constant(1);
    IntPoly cur = IntPoly::variable();
    if (n == 0)
        return prev;
    IntPoly two_x({BigInt(0), BigInt(2)});
    for (std::size_t k = 2; k <= n; ++k) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// S_n(s) = (1 - T_n(1 - 2s)) / 2, exactly over the integers.
inline IntPoly spread_poly_via_chebyshev(std::size_t n) {
    IntPoly inner({BigInt(1), BigInt(-2)});  // 1 - 2s
    IntPoly t = chebyshev_poly(n).compose(inner);
    return (IntPoly::constant(1) - t).divide_exact(IntPoly::constant(2));
}

inline bool spread_composition_check(std::size_t n, std::size_t m) {
    return spread_poly(n).compose(spread_poly(m)) == spread_poly(n * m);
}

// k-th irreducible factor in the recursive factorization
// S_k = prod_{d | k} phi_d: divide S_k by every proper-divisor factor.
// All divisions are exact over the integers.
inline IntPoly spread_cyclotomic(std::size_t k) {
    if (k == 0)
        throw Error(ErrorCode::UndefinedCase, "index must be positive");
    std::vector<IntPoly> phi(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        IntPoly p = spread_poly(i);
        for (std::size_t d = 1; d < i; ++d)
            if (i % d == 0)
                p = p.divide_exact(phi[d]);
        phi[i] = std::move(p);
    }
    return phi[k];
}

}  // namespace unigeo
