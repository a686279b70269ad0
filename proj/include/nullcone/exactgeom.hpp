#pragma once

// Exact rational convex geometry: orthogonal projection of the origin onto
// affine hulls, minimum-norm points of polytopes (Wolfe's nearest-point
// algorithm over the rationals), and convex-hull membership.

#include <cstddef>
#include <utility>
#include <vector>

#include "nullcone/qvec.hpp"

namespace nullcone {

// Affine hull of a finite generator set.
struct AffineSpan {
    std::vector<QVec> points;

    // Affine dimension: rank of {p_i - p_0}.
    int dim() const;
};

namespace detail {

// Gram-Schmidt over Q. Appends the component of d orthogonal to basis;
// returns false if d lies in the span already.
inline bool orthogonalize(std::vector<QVec>& basis, QVec d) {
    for (const QVec& b : basis) {
        Rat c = dot(d, b) / norm2(b);
        if (c != 0) d = sub(d, scaled(b, c));
    }
    if (is_zero(d)) return false;
    basis.push_back(std::move(d));
    return true;
}

// Solves the square system M x = rhs by Gaussian elimination.
// Returns false if M is singular.
inline bool solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs,
                         std::vector<Rat>& out) {
    const std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || M[row][col] == 0) continue;
            Rat f = M[row][col] / M[col][col];
            for (std::size_t k = col; k < n; ++k) M[row][k] -= f * M[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    out.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / M[i][i];
    return true;
}

// Minimum-norm point of the affine hull of an affinely independent set,
// together with its (unique) barycentric coordinates. KKT system:
// minimize |sum a_i q_i|^2 subject to sum a_i = 1.
inline bool affine_min_norm_bary(const std::vector<QVec>& pts,
                                 const std::vector<int>& idx, QVec& point,
                                 std::vector<Rat>& bary) {
    const std::size_t m = idx.size();
    std::vector<std::vector<Rat>> M(m + 1, std::vector<Rat>(m + 1, Rat(0)));
    std::vector<Rat> rhs(m + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) M[i][j] = dot(pts[idx[i]], pts[idx[j]]);
        M[i][m] = 1;
        M[m][i] = 1;
    }
    rhs[m] = 1;
    std::vector<Rat> sol;
    if (!solve_linear(std::move(M), std::move(rhs), sol)) return false;
    bary.assign(sol.begin(), sol.begin() + m);
    point.assign(pts[idx[0]].size(), Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        point = add(point, scaled(pts[idx[i]], bary[i]));
    return true;
}

}  // namespace detail

inline int AffineSpan::dim() const {
    std::vector<QVec> basis;
    for (std::size_t i = 1; i < points.size(); ++i)
        detail::orthogonalize(basis, sub(points[i], points[0]));
    return static_cast<int>(basis.size());
}

// The unique point of the affine hull of S closest to the origin,
// solved exactly via orthogonal projection.
inline QVec min_norm_point_affine(const AffineSpan& S) {
    if (S.points.empty()) throw ValidationError("min_norm_point_affine: empty span");
    const QVec& p0 = S.points[0];
    std::vector<QVec> basis;
    for (std::size_t i = 1; i < S.points.size(); ++i)
        detail::orthogonalize(basis, sub(S.points[i], p0));
    QVec p = p0;
    for (const QVec& b : basis) {
        Rat c = dot(p, b) / norm2(b);
        if (c != 0) p = sub(p, scaled(b, c));
    }
    return p;
}

// The unique minimum-norm point of conv(P). Wolfe's nearest-point algorithm;
// exact arithmetic makes every comparison sharp, so it terminates with the
// optimality certificate <v,q> >= <q,q> for all v in P.
inline QVec min_norm_point_hull(const std::vector<QVec>& P) {
    if (P.empty()) throw ValidationError("min_norm_point_hull: empty generator set");

    // Start from the shortest generator (ties: first).
    int best = 0;
    Rat bestn = norm2(P[0]);
    for (std::size_t i = 1; i < P.size(); ++i) {
        Rat n = norm2(P[i]);
        if (n < bestn) {
            bestn = n;
            best = static_cast<int>(i);
        }
    }
    QVec x = P[best];
    std::vector<int> corral = {best};
    std::vector<Rat> w = {Rat(1)};

    while (true) {
        // Most violated generator.
        Rat xx = norm2(x);
        if (xx == 0) return x;
        int j = -1;
        Rat bestdot;
        for (std::size_t i = 0; i < P.size(); ++i) {
            Rat d = dot(x, P[i]);
            if (j < 0 || d < bestdot) {
                bestdot = d;
                j = static_cast<int>(i);
            }
        }
        if (bestdot >= xx) return x;  // optimality certificate holds

        corral.push_back(j);
        w.push_back(Rat(0));

        while (true) {
            QVec y;
            std::vector<Rat> v;
            if (!detail::affine_min_norm_bary(P, corral, y, v))
                throw std::logic_error("wolfe: affinely dependent corral");
            bool interior = true;
            for (const Rat& a : v)
                if (a <= 0) {
                    interior = false;
                    break;
                }
            if (interior) {
                x = std::move(y);
                w = std::move(v);
                break;
            }
            // Step to the boundary of conv(corral) along x -> y.
            Rat theta(1);
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] <= 0) {
                    Rat t = w[i] / (w[i] - v[i]);
                    if (t < theta) theta = t;
                }
            }
            for (std::size_t i = 0; i < v.size(); ++i)
                w[i] += theta * (v[i] - w[i]);
            x = add(x, scaled(sub(y, x), theta));
            std::vector<int> nc;
            std::vector<Rat> nw;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] > 0) {
                    nc.push_back(corral[i]);
                    nw.push_back(w[i]);
                }
            }
            corral = std::move(nc);
            w = std::move(nw);
        }
    }
}

// Exact convex-combination membership: p in conv(P) iff the translated hull
// P - p contains the origin, i.e. its minimum-norm point is 0.
inline bool in_hull(const QVec& p, const std::vector<QVec>& P) {
    std::vector<QVec> shifted;
    shifted.reserve(P.size());
    for (const QVec& v : P) shifted.push_back(sub(v, p));
    return is_zero(min_norm_point_hull(shifted));
}

}  // namespace nullcone
