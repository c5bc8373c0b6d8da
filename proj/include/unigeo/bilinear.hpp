#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace unigeo {

template <class F>
using Vec = std::vector<typename F::Scalar>;

template <class F>
using Mat = std::vector<Vec<F>>;

template <class S>
bool all_zero(const std::vector<S>& v) {
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

template <class S>
bool vec_eq(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i]))
            return false;
    return true;
}

template <class S>
std::vector<S> vec_add(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
    std::vector<S> out(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

template <class S>
std::vector<S> vec_sub(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
    std::vector<S> out(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

template <class S>
std::vector<S> vec_scale(const S& c, const std::vector<S>& v) {
    std::vector<S> out(v);
    for (auto& x : out)
        x = c * x;
    return out;
}

// Symmetric bilinear form on F^n, row-major matrix, degenerate allowed.
// Symmetry is the one shape constraint and is checked at construction.
template <class F>
class QForm {
public:
    using Scalar = typename F::Scalar;

    QForm(const F& K, std::size_t n, std::vector<Scalar> entries)
        : n_(n), m_(std::move(entries)), zero_(K.zero()) {
        if (n_ == 0)
            throw Error(ErrorCode::DimensionMismatch, "form dimension must be positive");
        if (m_.size() != n_ * n_)
            throw Error(ErrorCode::DimensionMismatch,
                        "form needs " + std::to_string(n_ * n_) + " entries, got " + std::to_string(m_.size()));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!(at(i, j) == at(j, i)))
                    throw Error(ErrorCode::AsymmetricForm,
                                "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and transpose differ");
    }

    static QForm identity(const F& K, std::size_t n) {
        std::vector<Scalar> e(n * n, K.zero());
        for (std::size_t i = 0; i < n; ++i)
            e[i * n + i] = K.one();
        return QForm(K, n, std::move(e));
    }

    static QForm diagonal(const F& K, const std::vector<Scalar>& d) {
        std::vector<Scalar> e(d.size() * d.size(), K.zero());
        for (std::size_t i = 0; i < d.size(); ++i)
            e[i * d.size() + i] = d[i];
        return QForm(K, d.size(), std::move(e));
    }

    std::size_t dim() const { return n_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }

    Scalar eval(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
        if (u.size() != n_ || v.size() != n_)
            throw Error(ErrorCode::DimensionMismatch, "vector size does not match form dimension");
        Scalar acc = zero_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (is_zero(u[i]))
                continue;
            Scalar row = zero_;
            for (std::size_t j = 0; j < n_; ++j)
                row += at(i, j) * v[j];
            acc += u[i] * row;
        }
        return acc;
    }

    bool operator==(const QForm& o) const { return n_ == o.n_ && vec_eq(m_, o.m_); }

private:
    std::size_t n_;
    std::vector<Scalar> m_;
    Scalar zero_;
};

template <class F>
typename F::Scalar form_a(const QForm<F>& G, const Vec<F>& u) {
    return G.eval(u, u);
}

template <class F>
typename F::Scalar form_b(const QForm<F>& G, const Vec<F>& u, const Vec<F>& v) {
    return G.eval(u, v);
}

template <class F>
bool is_null_vector(const F&, const QForm<F>& G, const Vec<F>& u) {
    if (all_zero(u))
        throw Error(ErrorCode::ZeroVector, "null test needs a nonzero vector");
    return is_zero(G.eval(u, u));
}

// Null line through two distinct points: the displacement has quadrance zero.
template <class F>
bool is_null_line(const F&, const QForm<F>& G, const Vec<F>& u, const Vec<F>& v) {
    if (vec_eq(u, v))
        throw Error(ErrorCode::CoincidentPoints, "line needs two distinct points");
    auto d = vec_sub(v, u);
    return is_zero(G.eval(d, d));
}

// Foot of u on span{v}: ((u.v)/(v.v)) v. Undefined along null carriers.
template <class F>
Vec<F> project_onto_line(const F&, const QForm<F>& G, const Vec<F>& u, const Vec<F>& v) {
    if (all_zero(v))
        throw Error(ErrorCode::ZeroVector, "projection carrier is the zero vector");
    auto av = G.eval(v, v);
    if (is_zero(av))
        throw Error(ErrorCode::NullCarrier, "projection onto a null carrier is undefined");
    auto t = G.eval(u, v) / av;
    return vec_scale(t, v);
}

// Rank by fraction-free elimination: rows are cross-scaled, never divided,
// so it is safe verbatim over every exact field here.
template <class F>
std::size_t mat_rank(const F&, Mat<F> rows) {
    if (rows.empty())
        return 0;
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && is_zero(rows[pivot][col]))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (is_zero(rows[i][col]))
                continue;
            const auto pv = rows[r][col];
            const auto fv = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = pv * rows[i][j] - fv * rows[r][j];
        }
        ++r;
    }
    return r;
}

template <class F>
typename F::Scalar mat_det(const F& K, Mat<F> m) {
    const std::size_t n = m.size();
    if (n == 0)
        throw Error(ErrorCode::DimensionMismatch, "determinant of empty matrix");
    for (const auto& r : m)
        if (r.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m[pivot][col]))
            ++pivot;
        if (pivot == n)
            return K.zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            negate = !negate;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m[i][col]))
                continue;
            auto f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j)
                m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    auto det = K.one();
    for (std::size_t i = 0; i < n; ++i)
        det *= m[i][i];
    return negate ? -det : det;
}

// Deterministic nullspace basis: reduced echelon form, then one basis vector
// per free column in ascending column order.
template <class F>
Mat<F> kernel_basis(const F& K, Mat<F> rows, std::size_t ncols) {
    for (const auto& r : rows)
        if (r.size() != ncols)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    std::vector<std::size_t> pivot_row(ncols, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && is_zero(rows[pivot][col]))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        auto inv = K.one() / rows[r][col];
        for (std::size_t j = col; j < ncols; ++j)
            rows[r][j] = inv * rows[r][j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][col]))
                continue;
            const auto f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_row[col] = r;
        ++r;
    }
    Mat<F> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (pivot_row[fc] != SIZE_MAX)
            continue;
        Vec<F> v(ncols, K.zero());
        v[fc] = K.one();
        for (std::size_t pc = 0; pc < ncols; ++pc)
            if (pivot_row[pc] != SIZE_MAX)
                v[pc] = -rows[pivot_row[pc]][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Mat<F> gram_matrix(const F&, const QForm<F>& G, const std::vector<Vec<F>>& pts) {
    Mat<F> m;
    m.reserve(pts.size());
    for (const auto& a : pts) {
        Vec<F> row;
        row.reserve(pts.size());
        for (const auto& b : pts)
            row.push_back(G.eval(a, b));
        m.push_back(std::move(row));
    }
    return m;
}

template <class F>
typename F::Scalar gram_determinant(const F& K, const QForm<F>& G, const std::vector<Vec<F>>& pts) {
    return mat_det(K, gram_matrix(K, G, pts));
}

// Perpendicularity residue of lines wu, wv at their common point w:
// a_w b_uv - b_uw b_vw. Zero means the planes through those lines are
// perpendicular under G.
template <class F>
typename F::Scalar perp_residue_at(const F& K, const QForm<F>& G, const Vec<F>& w, const Vec<F>& u,
                                   const Vec<F>& v) {
    auto aw = G.eval(w, w);
    if (is_zero(aw))
        throw Error(ErrorCode::NullCommonPoint, "perpendicularity at a null point is undefined");
    if (mat_rank(K, Mat<F>{w, u}) < 2 || mat_rank(K, Mat<F>{w, v}) < 2)
        throw Error(ErrorCode::DependentInput, "lines need a direction independent of the common point");
    return aw * G.eval(u, v) - G.eval(u, w) * G.eval(v, w);
}

template <class F>
struct SpanMeet {
    enum class Kind { Empty, Point, Same } kind;
    Vec<F> point;
};

// Intersection of span{a,b} with span{c,d}: kernel of the n x 4 column
// system [a b -c -d]. Inputs must be independent pairs.
template <class F>
SpanMeet<F> meet_spans(const F& K, const Vec<F>& a, const Vec<F>& b, const Vec<F>& c, const Vec<F>& d) {
    const std::size_t n = a.size();
    if (b.size() != n || c.size() != n || d.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "span vectors have mixed sizes");
    if (mat_rank(K, Mat<F>{a, b}) < 2 || mat_rank(K, Mat<F>{c, d}) < 2)
        throw Error(ErrorCode::DependentInput, "spans need two independent generators each");
    Mat<F> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(Vec<F>{a[i], b[i], -c[i], -d[i]});
    Mat<F> kb = kernel_basis(K, std::move(rows), 4);
    if (kb.empty())
        return {SpanMeet<F>::Kind::Empty, {}};
    if (kb.size() >= 2)
        return {SpanMeet<F>::Kind::Same, {}};
    Vec<F> point = vec_add(vec_scale(kb[0][0], a), vec_scale(kb[0][1], b));
    if (all_zero(point))
        throw Error(ErrorCode::DependentInput, "degenerate span generators");
    return {SpanMeet<F>::Kind::Point, std::move(point)};
}

}  // namespace unigeo
