#pragma once

// Root systems of types A-G realized in Bourbaki coordinates, with positive
// roots, fundamental weights, Weyl-group actions and dominance machinery.
// The bilinear form is the plain Euclidean dot product of the realization.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nullcone/exactgeom.hpp"
#include "nullcone/qvec.hpp"

namespace nullcone {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
    Series series;
    int rank;

    std::string name() const {
        return std::string(1, static_cast<char>(series)) + std::to_string(rank);
    }
};

inline Series parse_series(const std::string& s) {
    if (s.size() == 1) {
        char c = s[0];
        if (c >= 'A' && c <= 'G') return static_cast<Series>(c);
    }
    throw ValidationError("unknown root-system series: " + s);
}

// Rank ranges of the simple types, low ranks excluded to avoid the
// coincidences B2=C2, D2=A1xA1, D3=A3, E5=D5.
inline void validate_type(const RootSystemType& t) {
    const int r = t.rank;
    bool ok = false;
    switch (t.series) {
        case Series::A: ok = r >= 1; break;
        case Series::B: ok = r >= 3; break;
        case Series::C: ok = r >= 2; break;
        case Series::D: ok = r >= 4; break;
        case Series::E: ok = r >= 6 && r <= 8; break;
        case Series::F: ok = r == 4; break;
        case Series::G: ok = r == 2; break;
    }
    if (!ok) throw ValidationError("rank out of range for type " + t.name());
}

// A dominant integral weight: coefficients over the fundamental weights plus
// the derived Euclidean realization.
struct Weight {
    std::vector<long> fw;
    QVec euclid;
};

struct RootDatum {
    RootSystemType type;
    int ambient = 0;
    std::vector<QVec> simple;            // alpha_1..alpha_r, Bourbaki numbering
    std::vector<QVec> positive;          // canonically sorted
    std::vector<QVec> fweights;          // varpi_1..varpi_r
    std::vector<std::vector<long>> cartan;  // <alpha_i, alpha_j^vee>

    int rank() const { return static_cast<int>(simple.size()); }

    // <v, alpha_i^vee> = 2<v,alpha_i>/<alpha_i,alpha_i>
    Rat coroot_pair(const QVec& v, int i) const {
        return Rat(2) * dot(v, simple[i]) / norm2(simple[i]);
    }

    bool is_dominant(const QVec& v) const {
        for (int i = 0; i < rank(); ++i)
            if (coroot_pair(v, i) < 0) return false;
        return true;
    }
};

namespace detail {

inline QVec basis_vec(int n, int i, const Rat& val = Rat(1)) {
    QVec v(n, Rat(0));
    v[i] = val;
    return v;
}

inline std::vector<QVec> bourbaki_simple_roots(const RootSystemType& t, int& ambient) {
    const int r = t.rank;
    std::vector<QVec> a;
    auto chain = [&](int n, int count) {
        for (int i = 0; i < count; ++i) {
            QVec v(n, Rat(0));
            v[i] = 1;
            v[i + 1] = -1;
            a.push_back(v);
        }
    };
    switch (t.series) {
        case Series::A:
            ambient = r + 1;
            chain(ambient, r);
            break;
        case Series::B:
            ambient = r;
            chain(ambient, r - 1);
            a.push_back(basis_vec(ambient, r - 1));
            break;
        case Series::C:
            ambient = r;
            chain(ambient, r - 1);
            a.push_back(basis_vec(ambient, r - 1, Rat(2)));
            break;
        case Series::D:
            ambient = r;
            chain(ambient, r - 1);
            {
                QVec v(ambient, Rat(0));
                v[r - 2] = 1;
                v[r - 1] = 1;
                a.push_back(v);
            }
            break;
        case Series::E: {
            ambient = 8;
            QVec a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            a.push_back(a1);
            QVec a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            a.push_back(a2);
            for (int i = 0; i < r - 2; ++i) {
                QVec v(8, Rat(0));
                v[i] = -1;
                v[i + 1] = 1;
                a.push_back(v);
            }
            break;
        }
        case Series::F: {
            ambient = 4;
            QVec a1(4, Rat(0)), a2(4, Rat(0));
            a1[1] = 1;
            a1[2] = -1;
            a2[2] = 1;
            a2[3] = -1;
            a.push_back(a1);
            a.push_back(a2);
            a.push_back(basis_vec(4, 3));
            a.push_back(QVec{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
            break;
        }
        case Series::G:
            ambient = 3;
            a.push_back(QVec{Rat(1), Rat(-1), Rat(0)});
            a.push_back(QVec{Rat(-2), Rat(1), Rat(1)});
            break;
    }
    return a;
}

}  // namespace detail

inline QVec simple_reflection(const RootDatum& d, int i, const QVec& v) {
    Rat c = d.coroot_pair(v, i);
    if (c == 0) return v;
    return sub(v, scaled(d.simple[i], c));
}

// Canonical Weyl-chamber representative: apply simple reflections with
// negative pairing until dominant. Terminates (finite Weyl group).
inline QVec dominant_rep(const RootDatum& d, QVec v) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < d.rank(); ++i) {
            if (d.coroot_pair(v, i) < 0) {
                v = simple_reflection(d, i, v);
                moved = true;
            }
        }
    }
    return v;
}

// Full Weyl orbit of v, or ResourceError if it would exceed cap.
inline std::set<QVec, QVecLess> weyl_orbit(const RootDatum& d, const QVec& v, long cap) {
    if (cap <= 0) throw ValidationError("weyl_orbit: cap must be positive");
    std::set<QVec, QVecLess> orbit{v};
    std::vector<QVec> frontier{v};
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const QVec& u : frontier) {
            for (int i = 0; i < d.rank(); ++i) {
                QVec w = simple_reflection(d, i, u);
                if (orbit.insert(w).second) {
                    if (static_cast<long>(orbit.size()) > cap)
                        throw ResourceError("weyl_orbit: orbit size cap " +
                                            std::to_string(cap) + " exceeded");
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

inline RootDatum build(const RootSystemType& type) {
    validate_type(type);
    RootDatum d;
    d.type = type;
    d.simple = detail::bourbaki_simple_roots(type, d.ambient);
    const int r = type.rank;

    d.cartan.assign(r, std::vector<long>(r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            Rat c = d.coroot_pair(d.simple[i], j);
            if (c.get_den() != 1)
                throw std::logic_error("non-integral Cartan entry for " + type.name());
            d.cartan[i][j] = c.get_num().get_si();
        }
    }

    // Fundamental weights: varpi_i = sum_k c_k alpha_k with
    // <varpi_i, alpha_j^vee> = delta_ij, solved inside the root span.
    {
        std::vector<std::vector<Rat>> M(r, std::vector<Rat>(r));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) M[j][k] = Rat(d.cartan[k][j]);
        for (int i = 0; i < r; ++i) {
            std::vector<Rat> rhs(r, Rat(0)), c;
            rhs[i] = 1;
            if (!detail::solve_linear(M, std::move(rhs), c))
                throw std::logic_error("singular Cartan matrix for " + type.name());
            QVec w(d.ambient, Rat(0));
            for (int k = 0; k < r; ++k) w = add(w, scaled(d.simple[k], c[k]));
            d.fweights.push_back(std::move(w));
        }
    }

    // All roots: closure of the simple roots under simple reflections.
    std::set<QVec, QVecLess> roots(d.simple.begin(), d.simple.end());
    std::vector<QVec> frontier(d.simple.begin(), d.simple.end());
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const QVec& b : frontier) {
            for (int i = 0; i < r; ++i) {
                QVec w = simple_reflection(d, i, b);
                if (roots.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    for (const QVec& a : d.simple) roots.insert(negated(a));
    // (closure of simple roots already reaches the negatives; kept as a no-op
    //  safeguard for rank 1)

    // Positive half: nonnegative expansion over the simple roots.
    // c = G^{-1} [<beta, alpha_j>] with G the Gram matrix of the simple roots.
    std::vector<std::vector<Rat>> G(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) G[i][j] = dot(d.simple[i], d.simple[j]);
    for (const QVec& beta : roots) {
        std::vector<Rat> rhs(r), c;
        for (int j = 0; j < r; ++j) rhs[j] = dot(beta, d.simple[j]);
        if (!detail::solve_linear(G, std::move(rhs), c))
            throw std::logic_error("degenerate simple-root Gram matrix");
        bool nonneg = true;
        for (const Rat& x : c)
            if (x < 0) {
                nonneg = false;
                break;
            }
        if (nonneg) d.positive.push_back(beta);
    }
    std::sort(d.positive.begin(), d.positive.end(), QVecLess{});
    return d;
}

// Expansion of v over the simple roots (exact; v must lie in the root span).
inline std::vector<Rat> simple_root_coords(const RootDatum& d, const QVec& v) {
    const int r = d.rank();
    std::vector<std::vector<Rat>> G(r, std::vector<Rat>(r));
    std::vector<Rat> rhs(r), c;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) G[i][j] = dot(d.simple[i], d.simple[j]);
        rhs[i] = dot(v, d.simple[i]);
    }
    if (!detail::solve_linear(std::move(G), std::move(rhs), c))
        throw std::logic_error("degenerate simple-root Gram matrix");
    QVec check(d.ambient, Rat(0));
    for (int i = 0; i < r; ++i) check = add(check, scaled(d.simple[i], c[i]));
    if (lex_cmp(check, v) != 0)
        throw ValidationError("vector not in the span of the simple roots");
    return c;
}

inline Weight make_weight(const RootDatum& d, const std::vector<long>& fw) {
    if (static_cast<int>(fw.size()) != d.rank())
        throw ValidationError("weight coefficient count != rank");
    Weight w;
    w.fw = fw;
    w.euclid.assign(d.ambient, Rat(0));
    for (int i = 0; i < d.rank(); ++i)
        if (fw[i] != 0) w.euclid = add(w.euclid, scaled(d.fweights[i], Rat(fw[i])));
    return w;
}

// Fundamental-weight coordinates of an integral vector in the weight lattice.
inline std::vector<long> fw_coords(const RootDatum& d, const QVec& v) {
    std::vector<long> fw(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
        Rat c = d.coroot_pair(v, i);
        if (c.get_den() != 1)
            throw ValidationError("vector is not an integral weight");
        fw[i] = c.get_num().get_si();
    }
    return fw;
}

inline bool is_dominant_weight(const Weight& w) {
    for (long c : w.fw)
        if (c < 0) return false;
    return true;
}

// Highest weight of the dual module: -w0.lambda, computed as the dominant
// representative of -lambda.
inline Weight dual_weight(const RootDatum& d, const Weight& lambda) {
    if (!is_dominant_weight(lambda)) throw ValidationError("dual_weight: non-dominant weight");
    QVec v = dominant_rep(d, negated(lambda.euclid));
    Weight w;
    w.fw = fw_coords(d, v);
    w.euclid = std::move(v);
    return w;
}

}  // namespace nullcone
