#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"

namespace unigeo {

// Expression templates are disabled on purpose: arithmetic must yield plain
// values, never lazy proxies aliasing operands that generic code (matrix
// elimination in particular) mutates between construction and use.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline bool is_zero(const BigRational& x) { return x.is_zero(); }

namespace detail {

// Accepts [+-]?digits; the backing bignum ctor is stricter about '+' than we
// want scene files to be, so signs are handled here.
inline BigInt parse_bigint(std::string_view text) {
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty integer literal");
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw Error(ErrorCode::ParseError, "sign without digits in '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw Error(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    BigInt value(std::string(text.substr(i)));
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

// Exact arithmetic over the rationals. Every scalar stays in lowest terms
// with positive denominator; the backing type re-normalizes after each op.
class RationalField {
public:
    using Scalar = BigRational;

    static constexpr bool is_exact = true;
    static constexpr bool is_finite = false;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long long v) const { return Scalar(v); }
    Scalar from_bigint(const BigInt& v) const { return Scalar(v); }

    Scalar make(BigInt num, BigInt den) const {
        if (den.is_zero())
            throw Error(ErrorCode::DivisionByZero, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Scalar(num, den);
    }

    // "n" or "n/d" with optional leading sign on either part.
    Scalar parse(std::string_view text) const {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Scalar(detail::parse_bigint(text));
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw Error(ErrorCode::ParseError, "more than one '/' in '" + std::string(text) + "'");
        BigInt num = detail::parse_bigint(text.substr(0, slash));
        BigInt den = detail::parse_bigint(text.substr(slash + 1));
        return make(num, den);
    }

    std::string str(const Scalar& x) const {
        BigInt num = boost::multiprecision::numerator(x);
        BigInt den = boost::multiprecision::denominator(x);
        std::string out = num.str();
        if (den != 1) {
            out += '/';
            out += den.str();
        }
        return out;
    }

    // Both square roots when x is a perfect square in Q, positive root first.
    std::optional<std::pair<Scalar, Scalar>> sqrt(const Scalar& x) const {
        if (x.is_zero())
            return std::pair{zero(), zero()};
        if (x < 0)
            return std::nullopt;
        BigInt num = boost::multiprecision::numerator(x);
        BigInt den = boost::multiprecision::denominator(x);
        BigInt rn = boost::multiprecision::sqrt(num);
        if (rn * rn != num)
            return std::nullopt;
        BigInt rd = boost::multiprecision::sqrt(den);
        if (rd * rd != den)
            return std::nullopt;
        Scalar root(rn, rd);
        return std::pair{root, Scalar(-root)};
    }

    double to_double(const Scalar& x) const { return x.template convert_to<double>(); }

    std::string name() const { return "rational"; }
};

}  // namespace unigeo
