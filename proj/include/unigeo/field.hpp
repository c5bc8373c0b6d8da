#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"
#include "float_field.hpp"
#include "prime_field.hpp"
#include "rational_field.hpp"

namespace unigeo {

// The shape every field context satisfies. Scalars carry the arithmetic via
// operators; the context carries construction, formatting and square roots.
template <class F>
concept FieldContext = requires(const F& k, const typename F::Scalar& a, std::string_view text) {
    typename F::Scalar;
    { k.zero() } -> std::convertible_to<typename F::Scalar>;
    { k.one() } -> std::convertible_to<typename F::Scalar>;
    { k.from_int(1ll) } -> std::convertible_to<typename F::Scalar>;
    { k.parse(text) } -> std::convertible_to<typename F::Scalar>;
    { k.str(a) } -> std::convertible_to<std::string>;
    { k.name() } -> std::convertible_to<std::string>;
    { F::is_exact } -> std::convertible_to<bool>;
    { F::is_finite } -> std::convertible_to<bool>;
    { a + a } -> std::convertible_to<typename F::Scalar>;
    { a - a } -> std::convertible_to<typename F::Scalar>;
    { a * a } -> std::convertible_to<typename F::Scalar>;
    { a / a } -> std::convertible_to<typename F::Scalar>;
    { -a } -> std::convertible_to<typename F::Scalar>;
    { a == a } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

static_assert(FieldContext<RationalField>);
static_assert(FieldContext<PrimeField>);
static_assert(FieldContext<Float64Field>);

enum class FieldKind { Rational, Prime, Float64 };

// Runtime field selector: "rational", "prime:<p>", "float64".
struct FieldDescriptor {
    FieldKind kind{FieldKind::Rational};
    std::uint64_t modulus{0};

    static FieldDescriptor parse(std::string_view text) {
        if (text == "rational")
            return {FieldKind::Rational, 0};
        if (text == "float64")
            return {FieldKind::Float64, 0};
        constexpr std::string_view prefix = "prime:";
        if (text.size() > prefix.size() && text.substr(0, prefix.size()) == prefix) {
            std::string_view digits = text.substr(prefix.size());
            std::uint64_t p = 0;
            for (char ch : digits) {
                if (ch < '0' || ch > '9')
                    throw Error(ErrorCode::ParseError, "bad modulus in field descriptor '" + std::string(text) + "'");
                if (p > (UINT64_MAX - 9) / 10)
                    throw Error(ErrorCode::ParseError, "modulus overflows in '" + std::string(text) + "'");
                p = p * 10 + static_cast<std::uint64_t>(ch - '0');
            }
            if (digits.empty())
                throw Error(ErrorCode::ParseError, "missing modulus in field descriptor '" + std::string(text) + "'");
            return {FieldKind::Prime, p};
        }
        throw Error(ErrorCode::ParseError, "unknown field descriptor '" + std::string(text) + "'");
    }

    std::string str() const {
        switch (kind) {
            case FieldKind::Rational: return "rational";
            case FieldKind::Prime:    return "prime:" + std::to_string(modulus);
            case FieldKind::Float64:  return "float64";
        }
        return "?";
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) = default;
};

// Instantiates the described field (validating the modulus) and hands it to fn.
template <class Fn>
decltype(auto) visit_field(const FieldDescriptor& d, Fn&& fn) {
    switch (d.kind) {
        case FieldKind::Rational: return fn(RationalField{});
        case FieldKind::Prime:    return fn(PrimeField(d.modulus));
        case FieldKind::Float64:  return fn(Float64Field{});
    }
    throw Error(ErrorCode::UnsupportedField, "corrupt field descriptor");
}

}  // namespace unigeo
