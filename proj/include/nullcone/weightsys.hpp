#pragma once

// Weight systems of irreducible highest-weight modules: the Weyl dimension
// formula and the Freudenthal multiplicity recursion, all over exact
// rationals.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nullcone/rootsystem.hpp"

namespace nullcone {

inline constexpr long kDefaultDimCap = 300;

struct WeightSystem {
    RootDatum datum;
    Weight highest;
    // weight (canonical euclidean key) -> multiplicity
    std::map<QVec, long, QVecLess> entries;
    long dim = 0;
};

inline QVec rho(const RootDatum& d) {
    QVec r(d.ambient, Rat(0));
    for (const QVec& w : d.fweights) r = add(r, w);
    return r;
}

// prod_{alpha>0} <lambda+rho, alpha> / <rho, alpha>, evaluated exactly.
inline long weyl_dim(const RootDatum& d, const Weight& lambda) {
    if (!is_dominant_weight(lambda)) throw ValidationError("weyl_dim: non-dominant weight");
    QVec rh = rho(d);
    QVec lr = add(lambda.euclid, rh);
    Rat num(1), den(1);
    for (const QVec& a : d.positive) {
        num *= dot(lr, a);
        den *= dot(rh, a);
    }
    Rat q = num / den;
    if (q.get_den() != 1 || q <= 0)
        throw std::logic_error("weyl_dim: non-integral value " + rat_str(q));
    return q.get_num().get_si();
}

// All weights of the irreducible module with highest weight lambda, with
// exact multiplicities: Freudenthal on the dominant weights, then Weyl-orbit
// expansion with constant multiplicity on each orbit.
inline WeightSystem weight_system(const RootDatum& d, const Weight& lambda,
                                  long dim_cap = kDefaultDimCap) {
    if (!is_dominant_weight(lambda)) throw ValidationError("weight_system: non-dominant weight");
    const long dim = weyl_dim(d, lambda);
    if (dim > dim_cap)
        throw ResourceError("weight_system: module dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(dim_cap));

    // Lattice points lambda - (nonneg. combination of simple roots) inside the
    // ball |mu| <= |lambda|; this contains every weight of the module.
    const Rat bound = norm2(lambda.euclid);
    std::set<QVec, QVecLess> seen{lambda.euclid};
    std::vector<QVec> frontier{lambda.euclid};
    std::vector<QVec> dominant;
    if (d.is_dominant(lambda.euclid)) dominant.push_back(lambda.euclid);
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const QVec& mu : frontier) {
            for (const QVec& a : d.simple) {
                QVec nu = sub(mu, a);
                if (norm2(nu) > bound) continue;
                if (!seen.insert(nu).second) continue;
                if (d.is_dominant(nu)) dominant.push_back(nu);
                next.push_back(std::move(nu));
            }
        }
        frontier = std::move(next);
    }

    // Height of lambda - mu orders the Freudenthal recursion.
    auto height = [&](const QVec& mu) {
        std::vector<Rat> c = simple_root_coords(d, sub(lambda.euclid, mu));
        Rat h(0);
        for (const Rat& x : c) h += x;
        if (h.get_den() != 1)
            throw std::logic_error("weight_system: non-integral height");
        return h.get_num().get_si();
    };
    std::sort(dominant.begin(), dominant.end(), [&](const QVec& x, const QVec& y) {
        long hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return lex_cmp(x, y) < 0;
    });

    const QVec rh = rho(d);
    const Rat top = norm2(add(lambda.euclid, rh));
    std::map<QVec, long, QVecLess> mult;  // dominant weights only
    for (const QVec& mu : dominant) {
        if (lex_cmp(mu, lambda.euclid) == 0) {
            mult[mu] = 1;
            continue;
        }
        Rat acc(0);
        for (const QVec& a : d.positive) {
            QVec nu = add(mu, a);
            while (norm2(nu) <= bound) {
                auto it = mult.find(dominant_rep(d, nu));
                if (it != mult.end()) acc += Rat(2 * it->second) * dot(nu, a);
                nu = add(nu, a);
            }
        }
        Rat denom = top - norm2(add(mu, rh));
        if (denom <= 0) throw std::logic_error("weight_system: Freudenthal denominator <= 0");
        Rat m = acc / denom;
        if (m.get_den() != 1 || m <= 0)
            throw std::logic_error("weight_system: non-integral multiplicity");
        mult[mu] = m.get_num().get_si();
    }

    WeightSystem ws;
    ws.datum = d;
    ws.highest = lambda;
    for (const auto& [mu, m] : mult) {
        for (const QVec& w : weyl_orbit(d, mu, dim)) ws.entries[w] = m;
        // a Weyl orbit never exceeds the module dimension here, since every
        // orbit member carries multiplicity >= 1
    }
    for (const auto& [w, m] : ws.entries) ws.dim += m;
    if (ws.dim != dim)
        throw std::logic_error("weight_system: Freudenthal total " + std::to_string(ws.dim) +
                               " != Weyl dimension " + std::to_string(dim));
    return ws;
}

}  // namespace nullcone
