#pragma once

namespace unigeo {

// Shared symmetric-polynomial residues. Written with repeated addition so
// they stay field-generic without threading a context through.

// (a+b+c)^2 - 2(a^2+b^2+c^2): vanishes exactly for the quadrance triple of
// three collinear points.
template <class S>
S triple_quad_residual(const S& a, const S& b, const S& c) {
    S sum = a + b + c;
    S sq = a * a + b * b + c * c;
    return sum * sum - (sq + sq);
}

// (a+b+c)^2 - 2(a^2+b^2+c^2) - 4abc: vanishes for the three spreads of a
// triangle, and for any three values of a concurrent coplanar line pencil.
template <class S>
S triple_spread_residual(const S& a, const S& b, const S& c) {
    S sum = a + b + c;
    S sq = a * a + b * b + c * c;
    S prod = a * b * c;
    return sum * sum - (sq + sq) - (prod + prod + prod + prod);
}

}  // namespace unigeo
