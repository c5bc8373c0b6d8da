#pragma once

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "rational_field.hpp"

namespace unigeo {

inline bool is_zero(const double& x) { return x == 0.0; }

// IEEE doubles behind the same interface as the exact fields. Exists for the
// numeric bridge work; everything that needs exactness rejects it up front.
class Float64Field {
public:
    using Scalar = double;

    static constexpr bool is_exact = false;
    static constexpr bool is_finite = false;

    Scalar zero() const { return 0.0; }
    Scalar one() const { return 1.0; }
    Scalar from_int(long long v) const { return static_cast<Scalar>(v); }
    Scalar from_bigint(const BigInt& v) const { return v.template convert_to<double>(); }

    Scalar parse(std::string_view text) const {
        std::string buf(text);
        if (buf.empty())
            throw Error(ErrorCode::ParseError, "empty float literal");
        char* end = nullptr;
        double value = std::strtod(buf.c_str(), &end);
        if (end != buf.c_str() + buf.size())
            throw Error(ErrorCode::ParseError, "bad float literal '" + buf + "'");
        return value;
    }

    std::string str(const Scalar& x) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }

    std::optional<std::pair<Scalar, Scalar>> sqrt(const Scalar&) const {
        throw Error(ErrorCode::UnsupportedField, "exact square root needs an exact field");
    }

    double to_double(const Scalar& x) const { return x; }

    std::string name() const { return "float64"; }
};

}  // namespace unigeo
