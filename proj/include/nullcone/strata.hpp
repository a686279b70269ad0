#pragma once

// Instability stratification over the weight polytope: enumerate candidate
// optimal one-parameter-subgroup directions as exact projections of the
// origin onto affine hulls of weight subsets, keep the ones certified by the
// minimum-norm optimality test, and count the maximal-dimension strata.
//
// The subset walk is the hot path. It runs fraction-free on checked 128-bit
// integers (weights are scaled to integer coordinates) and falls back to
// arbitrary-precision integers if a bound is ever exceeded, so every value
// produced is exact either way.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "nullcone/exactgeom.hpp"
#include "nullcone/weightsys.hpp"

namespace nullcone {

struct EnumOptions {
    unsigned long max_subsets = 100'000'000;  // subset-node budget
    int max_subset_size = 0;                  // 0 = affine-hull dimension of the weights
    int threads = 1;
    bool exhaustive = false;  // disable symmetry pruning and the size bound (oracle mode)
};

// A dominant candidate direction with its norm-square and supporting weights.
struct Candidate {
    QVec lambda;
    Rat norm2;
    std::vector<QVec> support;  // weights mu with <mu,lambda> >= norm2, sorted
};

struct Stratum {
    Candidate candidate;
    long dim_L = 0;     // sum of multiplicities over the support
    long dim_flag = 0;  // #{alpha > 0 : <alpha, lambda> > 0}
    long dim_total = 0;
};

struct NullconeReport {
    long dim_module = 0;
    long dim_nullcone = 0;
    long num_components = 0;
    std::vector<Stratum> strata;  // dim_total descending, then lambda ascending
    unsigned long subsets_visited = 0;
};

namespace detail {

using int128 = __int128;

// Stored values are kept below 2^40; the fraction-free updates form sums of
// two three-factor products, which then stay below 2^125 inside __int128.
constexpr int128 kIntLimit = int128(1) << 40;

struct OverflowSignal {};

inline mpz_class x_scaled_num(const Rat& x, const mpz_class& scale) {
    return x.get_num() * (scale / x.get_den());
}

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline mpz_class to_mpz(int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-x) : (unsigned __int128)x;
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    return neg ? mpz_class(-r) : r;
}

template <class I>
struct Ring;

template <>
struct Ring<int128> {
    static void check(const int128& x) {
        if (x > kIntLimit || x < -kIntLimit) throw OverflowSignal{};
    }
    static int128 gcd(const int128& a, const int128& b) { return gcd128(a, b); }
    static mpz_class mpz(const int128& x) { return to_mpz(x); }
};

template <>
struct Ring<mpz_class> {
    static void check(const mpz_class&) {}
    static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static const mpz_class& mpz(const mpz_class& x) { return x; }
};

// Divides every entry of the given vectors (and den) by their common gcd and
// verifies the result stays inside the exact-integer bound.
template <class I>
inline void reduce_common(std::vector<I>& a, std::vector<I>* b, I* den) {
    I g = 0;
    for (const I& x : a) g = Ring<I>::gcd(g, x);
    if (b)
        for (const I& x : *b) g = Ring<I>::gcd(g, x);
    if (den) g = Ring<I>::gcd(g, *den);
    if (g > 1) {
        for (I& x : a) x /= g;
        if (b)
            for (I& x : *b) x /= g;
        if (den) *den /= g;
    }
    for (const I& x : a) Ring<I>::check(x);
    if (b)
        for (const I& x : *b) Ring<I>::check(x);
    if (den) Ring<I>::check(*den);
}

template <class I>
inline I idot(const std::vector<I>& u, const std::vector<I>& v) {
    I s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

// Shared, immutable data of one enumeration run.
template <class I>
struct EnumProblem {
    std::vector<std::vector<I>> pts;  // pool weights, integer-scaled
    mpz_class scale;                  // common denominator applied to the weights
    const RootDatum* datum = nullptr;
    int max_size = 0;
    unsigned long max_subsets = 0;

    std::atomic<unsigned long> visited{0};
    std::atomic<bool> aborted{false};
};

// One subtree walker; owns its candidate set until the final merge.
template <class I>
struct EnumWalker {
    EnumProblem<I>* prob;
    std::set<QVec, QVecLess> found;  // dominant candidate directions
    unsigned long local_count = 0;

    // current subset state
    std::vector<int> members;
    std::vector<std::vector<I>> bvec;  // pairwise orthogonal direction basis
    std::vector<I> bnorm;
    std::vector<std::vector<I>> bexp;  // expansion of bvec over the members

    void tick() {
        if (++local_count >= 4096) flush();
    }
    void flush() {
        unsigned long total = prob->visited.fetch_add(local_count) + local_count;
        local_count = 0;
        if (total > prob->max_subsets) prob->aborted.store(true);
    }

    void emit(const std::vector<I>& pnum, const I& pden) {
        const mpz_class den = Ring<I>::mpz(pden) * prob->scale;
        QVec lam(pnum.size());
        for (std::size_t i = 0; i < pnum.size(); ++i) {
            lam[i] = Rat(Ring<I>::mpz(pnum[i]), den);
            lam[i].canonicalize();
        }
        found.insert(prob->datum ? dominant_rep(*prob->datum, lam) : std::move(lam));
    }

    // Extends the current subset with pool point idx. Returns false if the
    // point is affinely dependent on the subset or the projection hits zero;
    // in both cases the state is left unchanged.
    bool add_point(int idx, const std::vector<I>& pnum, const I& pden,
                   const std::vector<I>& bary, std::vector<I>& out_pnum, I& out_pden,
                   std::vector<I>& out_bary) {
        const std::vector<I>& first = prob->pts[members[0]];
        const std::vector<I>& nu = prob->pts[idx];
        const std::size_t n = nu.size();
        const std::size_t m = members.size();

        std::vector<I> d(n);
        for (std::size_t t = 0; t < n; ++t) d[t] = nu[t] - first[t];
        std::vector<I> dexp(m + 1, I(0));
        dexp[0] = -1;
        dexp[m] = 1;

        for (std::size_t j = 0; j < bvec.size(); ++j) {
            I c = idot(d, bvec[j]);
            if (c == 0) continue;
            for (std::size_t t = 0; t < n; ++t) d[t] = d[t] * bnorm[j] - c * bvec[j][t];
            for (std::size_t t = 0; t < m + 1; ++t) {
                I e = t < bexp[j].size() ? bexp[j][t] : I(0);
                dexp[t] = dexp[t] * bnorm[j] - c * e;
            }
            reduce_common<I>(d, &dexp, nullptr);
        }
        bool zero = true;
        for (const I& x : d)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) return false;  // affinely dependent

        I bn = idot(d, d);
        Ring<I>::check(bn);  // bn is stored and used as a multiplier
        I c2 = idot(pnum, d);

        out_pnum.assign(n, I(0));
        for (std::size_t t = 0; t < n; ++t) out_pnum[t] = pnum[t] * bn - c2 * d[t];
        out_pden = pden * bn;
        out_bary.assign(m + 1, I(0));
        for (std::size_t t = 0; t < m + 1; ++t) {
            I b = t < bary.size() ? bary[t] : I(0);
            I e = t < dexp.size() ? dexp[t] : I(0);
            out_bary[t] = b * bn - c2 * e;
        }
        reduce_common<I>(out_pnum, &out_bary, &out_pden);

        members.push_back(idx);
        bvec.push_back(std::move(d));
        bnorm.push_back(bn);
        bexp.push_back(std::move(dexp));
        return true;
    }

    void pop_point() {
        members.pop_back();
        bvec.pop_back();
        bnorm.pop_back();
        bexp.pop_back();
    }

    // Depth-first walk over increasing index sequences from `allowed`.
    void extend(const std::vector<int>& allowed, std::size_t from,
                const std::vector<I>& pnum, const I& pden, const std::vector<I>& bary) {
        if (static_cast<int>(members.size()) >= prob->max_size) return;
        if (prob->aborted.load(std::memory_order_relaxed)) return;
        std::vector<I> npnum, nbary;
        I npden;
        for (std::size_t pos = from; pos < allowed.size(); ++pos) {
            if (!add_point(allowed[pos], pnum, pden, bary, npnum, npden, nbary)) continue;
            tick();
            bool zero = true;
            for (const I& x : npnum)
                if (x != 0) {
                    zero = false;
                    break;
                }
            if (!zero) {
                bool inside = true;
                for (const I& x : nbary)
                    if (x < 0) {
                        inside = false;
                        break;
                    }
                if (inside) emit(npnum, npden);
                extend(allowed, pos + 1, npnum, npden, nbary);
            }
            // zero projection: every superset projects to zero as well
            pop_point();
        }
    }

    // Runs the subtree rooted at {mu1} (mu2 < 0) or {mu1, mu2}.
    void run_unit(int mu1, int mu2, const std::vector<int>& allowed, std::size_t from) {
        members.assign(1, mu1);
        bvec.clear();
        bnorm.clear();
        bexp.clear();
        std::vector<I> pnum = prob->pts[mu1];
        I pden = 1;
        std::vector<I> bary(1, I(1));
        if (mu2 < 0) {
            tick();
            emit(pnum, pden);  // singleton: projection is the point itself
            return;
        }
        std::vector<I> npnum, nbary;
        I npden;
        if (!add_point(mu2, pnum, pden, bary, npnum, npden, nbary))
            throw std::logic_error("distinct pool points reported dependent");
        tick();
        bool zero = true;
        for (const I& x : npnum)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) return;
        bool inside = true;
        for (const I& x : nbary)
            if (x < 0) {
                inside = false;
                break;
            }
        if (inside) emit(npnum, npden);
        extend(allowed, from, npnum, npden, nbary);
    }
};

struct EnumUnit {
    int mu1;
    int mu2;  // -1: singleton unit
    std::size_t from = 0;
    const std::vector<int>* allowed = nullptr;
};

// Raw enumeration: the set of dominant projections of the origin onto affine
// hulls of weight subsets, up to Weyl conjugacy.
template <class I>
inline std::set<QVec, QVecLess> enumerate_directions(const WeightSystem& ws,
                                                     const EnumOptions& opts,
                                                     unsigned long& visited_out) {
    const RootDatum& d = ws.datum;

    // Distinct nonzero weights, canonical order. The zero weight never
    // contributes: any subset whose affine hull meets 0 projects to 0.
    std::vector<QVec> pool;
    for (const auto& [mu, m] : ws.entries)
        if (!is_zero(mu)) pool.push_back(mu);

    EnumProblem<I> prob;
    prob.datum = &d;
    prob.max_subsets = opts.max_subsets;

    // Scale to integer coordinates; results are scale-covariant, dimensions
    // and counts are not affected.
    mpz_class scale(1);
    for (const QVec& w : pool)
        for (const Rat& x : w) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
    prob.scale = scale;
    prob.pts.reserve(pool.size());
    for (const QVec& w : pool) {
        std::vector<I> v(w.size());
        for (std::size_t t = 0; t < w.size(); ++t) {
            mpz_class num = x_scaled_num(w[t], scale);
            if constexpr (std::is_same_v<I, int128>) {
                if (!num.fits_slong_p()) throw OverflowSignal{};
                v[t] = int128(num.get_si());
                Ring<I>::check(v[t]);
            } else {
                v[t] = num;
            }
        }
        prob.pts.push_back(std::move(v));
    }

    // Size bound: affine-hull dimension of the weight set, which equals the
    // dimension of its linear span (the weights average to zero).
    {
        std::vector<QVec> basis;
        for (const auto& [mu, m] : ws.entries) orthogonalize(basis, mu);
        prob.max_size = static_cast<int>(basis.size());
    }
    if (opts.max_subset_size > 0) prob.max_size = opts.max_subset_size;
    if (opts.exhaustive) prob.max_size = static_cast<int>(pool.size());

    // key -> pool index
    std::map<QVec, int, QVecLess> index;
    for (std::size_t i = 0; i < pool.size(); ++i) index[pool[i]] = static_cast<int>(i);

    std::vector<EnumUnit> units;
    std::vector<std::unique_ptr<std::vector<int>>> allowed_store;

    if (opts.exhaustive) {
        auto all = std::make_unique<std::vector<int>>();
        for (std::size_t i = 0; i < pool.size(); ++i) all->push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < pool.size(); ++i) {
            units.push_back({static_cast<int>(i), -1, 0, nullptr});
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                units.push_back({static_cast<int>(i), static_cast<int>(j), j + 1, all.get()});
        }
        allowed_store.push_back(std::move(all));
    } else {
        // Weyl-orbit structure of the pool.
        std::vector<int> orbit_id(pool.size(), -1);
        std::vector<int> orbit_rep;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (orbit_id[i] >= 0) continue;
            int o = static_cast<int>(orbit_rep.size());
            QVec rep;
            for (const QVec& w : weyl_orbit(d, pool[i], static_cast<long>(pool.size()))) {
                orbit_id[index.at(w)] = o;
                if (d.is_dominant(w)) rep = w;
            }
            orbit_rep.push_back(index.at(rep));
        }

        for (int o = 0; o < static_cast<int>(orbit_rep.size()); ++o) {
            const int mu1 = orbit_rep[o];
            // Subsets whose lowest-numbered orbit is o are covered, up to
            // Weyl conjugacy, by subsets containing the dominant orbit
            // representative and otherwise drawing from orbits >= o.
            auto allowed = std::make_unique<std::vector<int>>();
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (orbit_id[i] >= o && static_cast<int>(i) != mu1)
                    allowed->push_back(static_cast<int>(i));

            units.push_back({mu1, -1, 0, nullptr});

            // The stabilizer of the dominant representative is generated by
            // the simple reflections fixing it. The second subset element can
            // be normalized to the canonically least point of its stabilizer
            // orbit.
            std::vector<int> fix;
            for (int i = 0; i < d.rank(); ++i)
                if (d.coroot_pair(pool[mu1], i) == 0) fix.push_back(i);
            std::set<int> seen;
            for (std::size_t pos = 0; pos < allowed->size(); ++pos) {
                int i = (*allowed)[pos];
                if (seen.count(i)) continue;
                // close the stabilizer orbit of pool[i]; pos is its least member
                std::set<QVec, QVecLess> orb{pool[i]};
                std::vector<QVec> frontier{pool[i]};
                while (!frontier.empty()) {
                    std::vector<QVec> next;
                    for (const QVec& u : frontier)
                        for (int s : fix) {
                            QVec w = simple_reflection(d, s, u);
                            if (orb.insert(w).second) next.push_back(std::move(w));
                        }
                    frontier = std::move(next);
                }
                for (const QVec& w : orb) seen.insert(index.at(w));
                units.push_back({mu1, i, pos + 1, allowed.get()});
            }
            allowed_store.push_back(std::move(allowed));
        }
    }

    // Deterministic regardless of thread count: the unit tree is fixed and
    // results merge into one canonical set.
    const int nthreads = std::max(1, opts.threads);
    std::vector<EnumWalker<I>> walkers(std::min<std::size_t>(nthreads, std::max<std::size_t>(units.size(), 1)));
    for (auto& w : walkers) w.prob = &prob;
    std::atomic<std::size_t> next_unit{0};
    std::exception_ptr err;
    std::mutex err_mu;

    auto body = [&](EnumWalker<I>& w) {
        try {
            while (true) {
                std::size_t u = next_unit.fetch_add(1);
                if (u >= units.size() || prob.aborted.load()) break;
                const EnumUnit& unit = units[u];
                static const std::vector<int> kEmpty;
                w.run_unit(unit.mu1, unit.mu2, unit.allowed ? *unit.allowed : kEmpty,
                           unit.from);
            }
            w.flush();
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
            prob.aborted.store(true);
        }
    };

    if (walkers.size() == 1) {
        body(walkers[0]);
    } else {
        std::vector<std::thread> threads;
        for (auto& w : walkers) threads.emplace_back(body, std::ref(w));
        for (auto& t : threads) t.join();
    }
    if (err) std::rethrow_exception(err);

    visited_out = prob.visited.load();
    if (visited_out > opts.max_subsets)
        throw ResourceError("candidate enumeration exceeded max_subsets budget of " +
                            std::to_string(opts.max_subsets));

    std::set<QVec, QVecLess> out;
    for (auto& w : walkers) out.merge(w.found);
    return out;
}

// Exhaustive variant without Weyl pruning, used on the small side problems of
// the stratum nonemptiness test: all nonzero projections of the origin onto
// affine hulls of pool subsets whose barycentric coordinates are nonnegative.
template <class I>
inline std::set<QVec, QVecLess> enumerate_plain(const std::vector<QVec>& pool, int max_size) {
    EnumProblem<I> prob;
    prob.datum = nullptr;
    prob.max_subsets = std::numeric_limits<unsigned long>::max();
    prob.max_size = max_size;

    mpz_class scale(1);
    for (const QVec& w : pool)
        for (const Rat& x : w) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
    prob.scale = scale;
    prob.pts.reserve(pool.size());
    for (const QVec& w : pool) {
        std::vector<I> v(w.size());
        for (std::size_t t = 0; t < w.size(); ++t) {
            mpz_class num = x_scaled_num(w[t], scale);
            if constexpr (std::is_same_v<I, int128>) {
                if (!num.fits_slong_p()) throw OverflowSignal{};
                v[t] = int128(num.get_si());
                Ring<I>::check(v[t]);
            } else {
                v[t] = num;
            }
        }
        prob.pts.push_back(std::move(v));
    }

    std::vector<int> all;
    for (std::size_t i = 0; i < pool.size(); ++i) all.push_back(static_cast<int>(i));
    EnumWalker<I> w;
    w.prob = &prob;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        w.run_unit(static_cast<int>(i), -1, all, 0);
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            w.run_unit(static_cast<int>(i), static_cast<int>(j), all, j + 1);
    }
    return std::move(w.found);
}

inline std::set<QVec, QVecLess> plain_directions(const std::vector<QVec>& pool, int max_size) {
    try {
        return enumerate_plain<int128>(pool, max_size);
    } catch (const OverflowSignal&) {
        return enumerate_plain<mpz_class>(pool, max_size);
    }
}

}  // namespace detail

inline bool stratum_nonempty(const std::vector<QVec>& pos_roots,
                             const std::map<QVec, long, QVecLess>& weights, const QVec& lambda);

// True when the generic vector of the module with the given weight multiset
// is unstable for the reductive group with the given positive roots, i.e.
// when the whole module is its own nullcone. Detected by finding a stratum of
// full dimension: a nonzero direction p that is the shortest vector of the
// hull of its support, accounts for every dimension of the module through
// dim_L + dim_flag, and has a nonempty stratum.
inline bool generic_vector_unstable(const std::vector<QVec>& pos_roots,
                                    const std::map<QVec, long, QVecLess>& weights) {
    long dim_z = 0;
    std::vector<QVec> pool;
    for (const auto& [mu, m] : weights) {
        dim_z += m;
        if (!is_zero(mu)) pool.push_back(mu);
    }
    if (pool.empty()) return false;  // torus acts trivially

    // Caratheodory bound: a minimum-norm point is reached on an affinely
    // independent subset, of size at most the affine dimension plus one.
    std::vector<QVec> basis;
    for (const QVec& mu : pool) detail::orthogonalize(basis, sub(mu, pool[0]));
    const int max_size = static_cast<int>(basis.size()) + 1;

    for (const QVec& p : detail::plain_directions(pool, max_size)) {
        const Rat n2 = norm2(p);
        std::vector<QVec> support;
        long dim_l = 0;
        for (const auto& [mu, m] : weights)
            if (dot(mu, p) >= n2) {
                support.push_back(mu);
                dim_l += m;
            }
        long flag = 0;
        for (const QVec& a : pos_roots)
            if (dot(a, p) != 0) ++flag;
        if (dim_l + flag != dim_z) continue;
        if (lex_cmp(min_norm_point_hull(support), p) != 0) continue;
        if (stratum_nonempty(pos_roots, weights, p)) return true;
    }
    return false;
}

// Hesselink blade test. A candidate direction lambda carries a nonempty
// stratum exactly when the weights sitting on its boundary hyperplane,
// shifted by -lambda, stay generically semistable for the centralizer of
// lambda. Without this test a surviving candidate can name an empty stratum
// whose dimension bookkeeping overshoots (even past dim V).
inline bool stratum_nonempty(const std::vector<QVec>& pos_roots,
                             const std::map<QVec, long, QVecLess>& weights, const QVec& lambda) {
    const Rat n2 = norm2(lambda);
    std::map<QVec, long, QVecLess> boundary;
    for (const auto& [mu, m] : weights)
        if (dot(mu, lambda) == n2) boundary[sub(mu, lambda)] = m;
    std::vector<QVec> sub_roots;
    for (const QVec& a : pos_roots)
        if (dot(a, lambda) == 0) sub_roots.push_back(a);
    return !generic_vector_unstable(sub_roots, boundary);
}

// All candidate optimal directions, up to Weyl conjugacy: dominant nonzero
// projections of the origin onto affine hulls of weight subsets, each with
// its supporting weight set attached.
inline std::vector<Candidate> enumerate_candidates(const WeightSystem& ws,
                                                   const EnumOptions& opts,
                                                   unsigned long* visited = nullptr) {
    if (ws.entries.empty()) throw ValidationError("enumerate_candidates: empty weight system");
    unsigned long count = 0;
    std::set<QVec, QVecLess> dirs;
    try {
        dirs = detail::enumerate_directions<detail::int128>(ws, opts, count);
    } catch (const detail::OverflowSignal&) {
        // exact-width bound exceeded: redo with arbitrary precision
        dirs = detail::enumerate_directions<mpz_class>(ws, opts, count);
    }
    if (visited) *visited = count;

    std::vector<Candidate> out;
    out.reserve(dirs.size());
    for (const QVec& lam : dirs) {
        Candidate c;
        c.lambda = lam;
        c.norm2 = norm2(lam);
        for (const auto& [mu, m] : ws.entries)
            if (dot(mu, lam) >= c.norm2) c.support.push_back(mu);
        out.push_back(std::move(c));
    }
    return out;
}

// Hesselink optimality: lambda must be the shortest vector of the convex hull
// of its own support.
inline bool optimality_filter(const WeightSystem& ws, const Candidate& c) {
    (void)ws;
    QVec q = min_norm_point_hull(c.support);
    return lex_cmp(q, c.lambda) == 0;
}

inline Stratum stratum_of(const WeightSystem& ws, const Candidate& c) {
    Stratum s;
    s.candidate = c;
    for (const QVec& mu : c.support) s.dim_L += ws.entries.at(mu);
    for (const QVec& a : ws.datum.positive)
        if (dot(a, c.lambda) > 0) ++s.dim_flag;
    s.dim_total = s.dim_L + s.dim_flag;
    return s;
}

// Full pipeline: candidates -> optimality filter -> strata -> component count.
inline NullconeReport analyze(const WeightSystem& ws, const EnumOptions& opts = {}) {
    if (ws.entries.empty()) throw ValidationError("analyze: empty weight system");
    if (is_zero(ws.highest.euclid))
        throw ValidationError("analyze: trivial module (zero highest weight)");

    NullconeReport rep;
    rep.dim_module = ws.dim;
    std::vector<Candidate> cands = enumerate_candidates(ws, opts, &rep.subsets_visited);
    for (Candidate& c : cands) {
        if (!optimality_filter(ws, c)) continue;
        if (!stratum_nonempty(ws.datum.positive, ws.entries, c.lambda)) continue;
        rep.strata.push_back(stratum_of(ws, c));
    }
    std::sort(rep.strata.begin(), rep.strata.end(), [](const Stratum& a, const Stratum& b) {
        if (a.dim_total != b.dim_total) return a.dim_total > b.dim_total;
        return lex_cmp(a.candidate.lambda, b.candidate.lambda) < 0;
    });
    if (!rep.strata.empty()) {
        rep.dim_nullcone = rep.strata.front().dim_total;
        for (const Stratum& s : rep.strata)
            if (s.dim_total == rep.dim_nullcone) ++rep.num_components;
    }
    return rep;
}

}  // namespace nullcone
