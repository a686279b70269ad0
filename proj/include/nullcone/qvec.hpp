#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nullcone/errors.hpp"

namespace nullcone {

// Exact rational scalar. All geometry in this library is tolerance-free.
using Rat = mpq_class;

// A point of the ambient Euclidean space, exact rational coordinates.
using QVec = std::vector<Rat>;

inline void check_same_dim(const QVec& u, const QVec& v) {
    if (u.size() != v.size())
        throw DimensionError("vector length mismatch: " + std::to_string(u.size()) +
                             " vs " + std::to_string(v.size()));
}

inline Rat dot(const QVec& u, const QVec& v) {
    check_same_dim(u, v);
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline Rat norm2(const QVec& v) { return dot(v, v); }

inline QVec add(const QVec& u, const QVec& v) {
    check_same_dim(u, v);
    QVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

inline QVec sub(const QVec& u, const QVec& v) {
    check_same_dim(u, v);
    QVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

inline QVec scaled(const QVec& v, const Rat& t) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * t;
    return r;
}

inline QVec negated(const QVec& v) { return scaled(v, Rat(-1)); }

inline bool is_zero(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

// Lexicographic order on coordinates; the canonical order used everywhere
// (dedup keys, report sorting, subset enumeration).
inline int lex_cmp(const QVec& a, const QVec& b) {
    check_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

struct QVecLess {
    bool operator()(const QVec& a, const QVec& b) const { return lex_cmp(a, b) < 0; }
};

// "p/q" in lowest terms, or plain "p" for integers.
inline std::string rat_str(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

inline Rat parse_rat(const std::string& s) {
    try {
        Rat x(s, 10);
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse rational: " + s);
    }
}

inline std::string qvec_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

}  // namespace nullcone
