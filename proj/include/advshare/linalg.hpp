#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

#include "advshare/field.hpp"

namespace advshare {

using Vec = std::vector<Fq>;

// Which coordinates a share index owns when intersecting with or projecting
// onto a share subset: one coordinate per share (classical codewords), or the
// symplectic pair (a_i | b_i) (vectors in F_q^{2n}).
enum class Support { coordinate, pair };

struct MatrixFq {
    const Field* f = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<Fq> e;  // row-major

    MatrixFq() = default;
    MatrixFq(const Field& field, std::size_t r, std::size_t c) : f(&field), rows(r), cols(c), e(r * c, 0) {}

    Fq& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    Fq at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

    std::span<const Fq> row(std::size_t r) const { return {e.data() + r * cols, cols}; }
    Vec row_vec(std::size_t r) const { return Vec(e.begin() + r * cols, e.begin() + (r + 1) * cols); }

    void append_row(std::span<const Fq> v) {
        e.insert(e.end(), v.begin(), v.end());
        ++rows;
    }

    friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e &&
               ((a.f == nullptr) == (b.f == nullptr)) && (a.f == nullptr || a.f->q() == b.f->q());
    }
};

// Gauss-Jordan to reduced row echelon form; returns the rank. Deterministic:
// pivots are chosen top-down, first nonzero entry in the leftmost open column.
inline std::size_t rref_inplace(MatrixFq& M) {
    const Field& F = *M.f;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::size_t piv = rank;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(rank, j));
        const Fq s = F.inv(M.at(rank, col));
        for (std::size_t j = col; j < M.cols; ++j) M.at(rank, j) = F.mul(M.at(rank, j), s);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == rank || M.at(r, col) == 0) continue;
            const Fq fac = M.at(r, col);
            for (std::size_t j = col; j < M.cols; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(fac, M.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

inline std::pair<MatrixFq, std::size_t> rref(MatrixFq M) {
    const std::size_t rank = rref_inplace(M);
    return {std::move(M), rank};
}

// A subspace of F_q^ambient held as its RREF basis (zero rows dropped).
// Canonical form makes equality a plain entry-wise comparison, which is the
// single subspace-equality test used everywhere downstream.
struct Subspace {
    const Field* f = nullptr;
    std::size_t ambient = 0;
    Support kind = Support::coordinate;
    MatrixFq basis;

    Subspace() = default;

    static Subspace zero(const Field& F, std::size_t ambient, Support kind) {
        Subspace s;
        s.f = &F;
        s.ambient = ambient;
        s.kind = kind;
        s.basis = MatrixFq(F, 0, ambient);
        return s;
    }

    static Subspace span(const Field& F, std::size_t ambient, Support kind, MatrixFq rows) {
        if (rows.cols != ambient) throw Error("AmbientMismatch", "row length differs from ambient dimension");
        const std::size_t rank = rref_inplace(rows);
        rows.e.resize(rank * rows.cols);
        rows.rows = rank;
        Subspace s;
        s.f = &F;
        s.ambient = ambient;
        s.kind = kind;
        s.basis = std::move(rows);
        return s;
    }

    static Subspace span_rows(const Field& F, std::size_t ambient, Support kind,
                              const std::vector<Vec>& rows) {
        MatrixFq M(F, 0, ambient);
        for (const Vec& r : rows) {
            if (r.size() != ambient) throw Error("AmbientMismatch", "row length differs from ambient dimension");
            M.append_row(r);
        }
        return span(F, ambient, kind, std::move(M));
    }

    static Subspace full(const Field& F, std::size_t ambient, Support kind) {
        MatrixFq M(F, ambient, ambient);
        for (std::size_t i = 0; i < ambient; ++i) M.at(i, i) = 1;
        return span(F, ambient, kind, std::move(M));
    }

    std::size_t dim() const { return basis.rows; }

    std::vector<std::size_t> pivot_cols() const {
        std::vector<std::size_t> piv;
        for (std::size_t r = 0; r < basis.rows; ++r) {
            std::size_t c = 0;
            while (c < ambient && basis.at(r, c) == 0) ++c;
            piv.push_back(c);
        }
        return piv;
    }

    // Residual of v after elimination against the basis; zero iff v is a member.
    Vec reduce(Vec v) const {
        const Field& F = *f;
        for (std::size_t r = 0; r < basis.rows; ++r) {
            std::size_t c = 0;
            while (c < ambient && basis.at(r, c) == 0) ++c;
            if (c == ambient || v[c] == 0) continue;
            const Fq fac = v[c];
            for (std::size_t j = c; j < ambient; ++j) v[j] = F.sub(v[j], F.mul(fac, basis.at(r, j)));
        }
        return v;
    }

    bool contains(std::span<const Fq> v) const {
        Vec r = reduce(Vec(v.begin(), v.end()));
        return std::all_of(r.begin(), r.end(), [](Fq x) { return x == 0; });
    }

    bool contains_subspace(const Subspace& W) const {
        if (W.ambient != ambient) throw Error("AmbientMismatch", "subspaces live in different ambients");
        for (std::size_t r = 0; r < W.basis.rows; ++r)
            if (!contains(W.basis.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.kind == b.kind && a.basis == b.basis;
    }
};

inline Vec vec_add(const Field& F, Vec a, std::span<const Fq> b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], b[i]);
    return a;
}

inline Vec vec_scale(const Field& F, Fq s, std::span<const Fq> v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = F.mul(s, v[i]);
    return r;
}

inline Fq dot(const Field& F, std::span<const Fq> a, std::span<const Fq> b) {
    if (a.size() != b.size()) throw Error("AmbientMismatch", "dot product of unequal lengths");
    Fq acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

inline bool is_zero_vec(std::span<const Fq> v) {
    return std::all_of(v.begin(), v.end(), [](Fq x) { return x == 0; });
}

struct LinearSolution {
    Vec particular;       // one x with A x = b, free variables set to zero
    MatrixFq kernel;      // rows span all homogeneous solutions
};

// Solve A x = b (column convention). Returns nullopt when b is outside the
// column space.
inline std::optional<LinearSolution> solve(const MatrixFq& A, std::span<const Fq> b) {
    const Field& F = *A.f;
    if (b.size() != A.rows) throw Error("AmbientMismatch", "rhs length differs from row count");
    MatrixFq aug(F, A.rows, A.cols + 1);
    for (std::size_t r = 0; r < A.rows; ++r) {
        for (std::size_t c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    rref_inplace(aug);

    std::vector<std::ptrdiff_t> pivot_of_col(A.cols, -1);
    for (std::size_t r = 0; r < aug.rows; ++r) {
        std::size_t c = 0;
        while (c <= A.cols && c < aug.cols && aug.at(r, c) == 0) ++c;
        if (c == A.cols) return std::nullopt;  // row (0 .. 0 | nonzero)
        if (c < A.cols) pivot_of_col[c] = static_cast<std::ptrdiff_t>(r);
    }

    LinearSolution sol;
    sol.particular.assign(A.cols, 0);
    for (std::size_t c = 0; c < A.cols; ++c)
        if (pivot_of_col[c] >= 0) sol.particular[c] = aug.at(static_cast<std::size_t>(pivot_of_col[c]), A.cols);

    sol.kernel = MatrixFq(F, 0, A.cols);
    for (std::size_t free = 0; free < A.cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Vec k(A.cols, 0);
        k[free] = 1;
        for (std::size_t c = 0; c < A.cols; ++c)
            if (pivot_of_col[c] >= 0)
                k[c] = F.neg(aug.at(static_cast<std::size_t>(pivot_of_col[c]), free));
        sol.kernel.append_row(k);
    }
    return sol;
}

// Row vectors x with M x^T = 0; equals the Euclidean dual of the row space.
inline Subspace euclidean_dual(const Subspace& V) {
    const Field& F = *V.f;
    auto sol = solve(V.basis, Vec(V.basis.rows, 0));
    Subspace d = Subspace::span(F, V.ambient, V.kind, sol->kernel);
    return d;
}

inline Subspace sum(const Subspace& V, const Subspace& W) {
    if (V.ambient != W.ambient || V.kind != W.kind)
        throw Error("AmbientMismatch", "sum of subspaces from different ambients");
    MatrixFq M = V.basis;
    for (std::size_t r = 0; r < W.basis.rows; ++r) M.append_row(W.basis.row(r));
    return Subspace::span(*V.f, V.ambient, V.kind, std::move(M));
}

// Zassenhaus: reduce [B_V B_V; B_W 0]; rows with zero left block carry an
// intersection basis in the right block.
inline Subspace intersect(const Subspace& V, const Subspace& W) {
    if (V.ambient != W.ambient || V.kind != W.kind)
        throw Error("AmbientMismatch", "intersection of subspaces from different ambients");
    const Field& F = *V.f;
    const std::size_t n = V.ambient;
    MatrixFq M(F, V.dim() + W.dim(), 2 * n);
    for (std::size_t r = 0; r < V.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            M.at(r, c) = V.basis.at(r, c);
            M.at(r, n + c) = V.basis.at(r, c);
        }
    for (std::size_t r = 0; r < W.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) M.at(V.dim() + r, c) = W.basis.at(r, c);
    rref_inplace(M);
    MatrixFq out(F, 0, n);
    for (std::size_t r = 0; r < M.rows; ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = (M.at(r, c) == 0);
        if (!left_zero) continue;
        Vec right(n);
        for (std::size_t c = 0; c < n; ++c) right[c] = M.at(r, n + c);
        if (!is_zero_vec(right)) out.append_row(right);
    }
    return Subspace::span(F, n, V.kind, std::move(out));
}

inline std::size_t quotient_dim(const Subspace& V, const Subspace& W) {
    if (V.ambient != W.ambient || V.kind != W.kind)
        throw Error("AmbientMismatch", "quotient of subspaces from different ambients");
    if (!V.contains_subspace(W)) throw Error("NotASubspace", "denominator is not contained in numerator");
    return V.dim() - W.dim();
}

// 0-indexed coordinate columns owned by a share subset under the convention.
inline std::vector<std::size_t> owned_columns(Support kind, std::size_t ambient,
                                              std::span<const int> shares) {
    std::vector<std::size_t> cols;
    if (kind == Support::coordinate) {
        for (int s : shares) {
            if (s < 0 || static_cast<std::size_t>(s) >= ambient)
                throw Error("IndexOutOfRange", "share index outside 1..n");
            cols.push_back(static_cast<std::size_t>(s));
        }
    } else {
        const std::size_t n = ambient / 2;
        for (int s : shares) {
            if (s < 0 || static_cast<std::size_t>(s) >= n)
                throw Error("IndexOutOfRange", "share index outside 1..n");
            cols.push_back(static_cast<std::size_t>(s));
        }
        for (int s : shares) cols.push_back(n + static_cast<std::size_t>(s));
    }
    return cols;
}

// V ∩ F_q^A: members supported only on the coordinates A owns.
inline Subspace restrict_support(const Subspace& V, std::span<const int> shares) {
    const Field& F = *V.f;
    const std::vector<std::size_t> keep = owned_columns(V.kind, V.ambient, shares);
    std::vector<bool> kept(V.ambient, false);
    for (std::size_t c : keep) kept[c] = true;
    std::vector<std::size_t> drop;
    for (std::size_t c = 0; c < V.ambient; ++c)
        if (!kept[c]) drop.push_back(c);

    // x with (x G)|_drop = 0, i.e. kernel of G[:, drop]^T applied from the left.
    MatrixFq Gd(F, drop.size(), V.dim());
    for (std::size_t r = 0; r < drop.size(); ++r)
        for (std::size_t c = 0; c < V.dim(); ++c) Gd.at(r, c) = V.basis.at(c, drop[r]);
    auto sol = solve(Gd, Vec(drop.size(), 0));
    MatrixFq out(F, 0, V.ambient);
    for (std::size_t r = 0; r < sol->kernel.rows; ++r) {
        Vec v(V.ambient, 0);
        for (std::size_t c = 0; c < V.dim(); ++c) {
            const Fq coef = sol->kernel.at(r, c);
            if (coef == 0) continue;
            for (std::size_t j = 0; j < V.ambient; ++j)
                v[j] = F.add(v[j], F.mul(coef, V.basis.at(c, j)));
        }
        out.append_row(v);
    }
    return Subspace::span(F, V.ambient, V.kind, std::move(out));
}

// P_A(V): coordinate projection onto the columns A owns. For the pair
// convention the result is a symplectic space over 2|A| coordinates with the
// (a|b) block layout preserved.
inline Subspace project(const Subspace& V, std::span<const int> shares) {
    const Field& F = *V.f;
    const std::vector<std::size_t> keep = owned_columns(V.kind, V.ambient, shares);
    MatrixFq M(F, V.dim(), keep.size());
    for (std::size_t r = 0; r < V.dim(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) M.at(r, c) = V.basis.at(r, keep[c]);
    return Subspace::span(F, keep.size(), V.kind, std::move(M));
}

namespace detail {

// Enumeration guard: q^dim <= 2^cap. Default cap 20; ADVSHARE_MAX_DIM raises it.
inline void check_enumerable(std::uint64_t q, std::size_t dim, const char* what) {
    std::uint32_t cap = 20;
    if (const char* env = std::getenv("ADVSHARE_MAX_DIM")) {
        const long v = std::atol(env);
        if (v > 0) cap = static_cast<std::uint32_t>(v);
    }
    long double size = 1.0L;
    for (std::size_t i = 0; i < dim; ++i) size *= static_cast<long double>(q);
    if (size > std::pow(2.0L, static_cast<long double>(cap)))
        throw Error("EnumerationTooLarge",
                    std::string(what) + " would enumerate q^" + std::to_string(dim) + " elements");
}

// Calls fn(element) for every vector in the row space, including zero.
// Odometer over basis coefficients (element codes, so extension fields get
// every scalar, not just the prime subfield); deterministic order. Suffix
// sums keep the amortized cost linear per element.
template <typename Fn>
inline void for_each_element(const Subspace& V, Fn&& fn) {
    const Field& F = *V.f;
    const std::size_t d = V.dim();
    std::vector<Fq> coef(d, 0);
    std::vector<Vec> suffix(d + 1, Vec(V.ambient, 0));  // suffix[i] = sum_{j>=i} coef_j * row_j
    while (true) {
        fn(suffix[0]);
        std::size_t i = 0;
        while (i < d && coef[i] == F.q() - 1) coef[i++] = 0;
        if (i == d) break;
        ++coef[i];
        Vec s = vec_add(F, vec_scale(F, coef[i], V.basis.row(i)), suffix[i + 1]);
        for (std::size_t j = i + 1; j-- > 0;) suffix[j] = s;
    }
}

}  // namespace detail

// Transversal of V over W (W ⊆ V): the rows of RREF(V) whose pivot column is
// not a pivot column of RREF(W). Their cosets form a basis of V/W, and the
// choice is canonical in the RREF bases.
inline std::vector<Vec> transversal(const Subspace& V, const Subspace& W) {
    if (!V.contains_subspace(W)) throw Error("NotASubspace", "transversal needs W inside V");
    const std::vector<std::size_t> pv = V.pivot_cols();
    const std::vector<std::size_t> pw = W.pivot_cols();
    std::vector<Vec> out;
    for (std::size_t r = 0; r < pv.size(); ++r)
        if (std::find(pw.begin(), pw.end(), pv[r]) == pw.end()) out.push_back(V.basis.row_vec(r));
    return out;
}

}  // namespace advshare
