// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Set NULLCONE_STRETCH=1 to include the large opt-in cases.

#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nullcone/nullcone.hpp"

using namespace nullcone;

namespace {

bool all_ok = true;

void line(int n, bool ok, const std::string& what, const std::string& note = "") {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!ok) all_ok = false;
}

struct Case {
    CatalogEntry entry;
    RootDatum datum;
    Weight weight;
    long dim = 0;
    std::optional<NullconeReport> report;
};

std::vector<Case> cases;

void load_catalog() {
    for (const CatalogEntry& e : catalog_entries(8)) {
        Case c;
        c.entry = e;
        c.datum = build(e.type);
        c.weight = make_weight(c.datum, e.fw);
        c.dim = weyl_dim(c.datum, c.weight);
        cases.push_back(std::move(c));
    }
}

const NullconeReport& report_of(Case& c, bool unbounded = false) {
    if (!c.report) {
        WeightSystem ws = weight_system(c.datum, c.weight);
        EnumOptions o;
        if (unbounded) o.max_subsets = std::numeric_limits<unsigned long>::max();
        c.report = analyze(ws, o);
    }
    return *c.report;
}

// expected component count and dimension both satisfied
bool entry_matches(Case& c, std::string& why) {
    Expectation x = expected(c.entry, c.dim);
    const NullconeReport& r = report_of(c);
    if (r.num_components != x.components) {
        why += c.entry.name() + ": components " + std::to_string(r.num_components) + " != " +
               std::to_string(x.components) + "; ";
        return false;
    }
    if (x.dim_nullcone && r.dim_nullcone != *x.dim_nullcone) {
        why += c.entry.name() + ": dim " + std::to_string(r.dim_nullcone) + " != " +
               std::to_string(*x.dim_nullcone) + "; ";
        return false;
    }
    return true;
}

Case* find_case(Series s, int r, std::vector<long> fw) {
    for (Case& c : cases)
        if (c.entry.type.series == s && c.entry.type.rank == r && c.entry.fw == fw) return &c;
    return nullptr;
}

bool in_list(const CatalogEntry& e, const std::string& l) {
    return std::count(e.lists.begin(), e.lists.end(), l) > 0;
}

void criterion1() {
    std::string why;
    bool ok = true;
    int ran = 0, reducible = 0;
    for (Case& c : cases) {
        if (c.dim > 42) continue;
        ++ran;
        if (!entry_matches(c, why)) ok = false;
        if (c.report && c.report->num_components == 2) ++reducible;
    }
    Case* d4 = find_case(Series::D, 4, {2, 0, 0, 0});
    Case* a3 = find_case(Series::A, 3, {0, 2, 0});
    ok = ok && d4 && d4->dim == 35 && report_of(*d4).num_components == 2;
    ok = ok && a3 && a3->dim == 20 && report_of(*a3).num_components == 2;
    ok = ok && reducible == 2;
    line(1, ok, "reducibility across all catalog entries of dimension <= 42",
         "ran " + std::to_string(ran) + " entries" + (why.empty() ? "" : "; " + why));
}

void criterion2() {
    Case* c = find_case(Series::A, 7, {0, 0, 0, 1, 0, 0, 0});
    const NullconeReport& r = report_of(*c);
    bool ok = c->dim == 70 && r.num_components == 2 && r.dim_nullcone == 63;
    line(2, ok, "flagship case (A7, w4): 2 components of dimension 63",
         "subsets visited " + std::to_string(r.subsets_visited));
}

void criterion3(bool stretch) {
    std::string why;
    bool ok = true;
    auto check = [&](Series s, int rk, std::vector<long> fw, long want, bool big = false) {
        Case* c = find_case(s, rk, fw);
        const NullconeReport& r = report_of(*c, big);
        if (r.dim_nullcone != want || r.num_components != 1) {
            ok = false;
            why += c->entry.name() + " gave dim " + std::to_string(r.dim_nullcone) + "; ";
        }
    };
    check(Series::F, 4, {0, 0, 0, 1}, 24);
    check(Series::C, 4, {0, 0, 0, 1}, 36);
    check(Series::B, 6, {0, 0, 0, 0, 0, 1}, 62);
    std::string note = why;
    if (stretch) {
        check(Series::A, 8, {0, 0, 1, 0, 0, 0, 0, 0}, 80, true);
    } else {
        note += "stretch case (A8, w3) skipped; set NULLCONE_STRETCH=1";
    }
    line(3, ok, "reported nullcone dimensions: F4 w4 -> 24, C4 w4 -> 36, B6 w6 -> 62" +
                    std::string(stretch ? ", A8 w3 -> 80" : ""),
         note);
}

void criterion4() {
    std::string why;
    bool ok = true;
    int ran = 0;
    for (Case& c : cases) {
        if (c.dim > 70) continue;
        bool iii = in_list(c.entry, "iii"), iv = in_list(c.entry, "iv");
        if (!iii && !iv) continue;
        ++ran;
        const NullconeReport& r = report_of(c);
        long want = iii ? c.dim : c.dim - 1;
        if (r.dim_nullcone != want || r.num_components != 1) {
            ok = false;
            why += c.entry.name() + ": dim " + std::to_string(r.dim_nullcone) + " expected " +
                   std::to_string(want) + "; ";
        }
    }
    line(4, ok, "trivial-invariant entries fill the module, one-invariant entries miss by one",
         "ran " + std::to_string(ran) + " entries of dimension <= 70" +
             (why.empty() ? "" : "; " + why));
}

void criterion5() {
    std::string why;
    bool ok = true;
    int ran = 0;
    for (Case& c : cases) {
        if (c.dim > 250) continue;
        ++ran;
        WeightSystem ws = weight_system(c.datum, c.weight);  // asserts total == weyl_dim
        long total = 0;
        QVec sum(c.datum.ambient, Rat(0));
        for (const auto& [mu, m] : ws.entries) {
            total += m;
            sum = add(sum, scaled(mu, Rat(m)));
        }
        bool stable = true;
        for (const auto& [mu, m] : ws.entries)
            for (int i = 0; i < c.datum.rank() && stable; ++i) {
                auto it = ws.entries.find(simple_reflection(c.datum, i, mu));
                stable = it != ws.entries.end() && it->second == m;
            }
        if (total != c.dim || !is_zero(sum) || !stable) {
            ok = false;
            why += c.entry.name() + "; ";
        }
    }
    line(5, ok, "weight systems: Freudenthal totals, Weyl stability, zero weighted sum",
         "ran " + std::to_string(ran) + " entries of dimension <= 250" +
             (why.empty() ? "" : "; failed " + why));
}

bool reports_equal(const NullconeReport& a, const NullconeReport& b) {
    if (a.dim_module != b.dim_module || a.dim_nullcone != b.dim_nullcone ||
        a.num_components != b.num_components || a.strata.size() != b.strata.size())
        return false;
    for (std::size_t i = 0; i < a.strata.size(); ++i) {
        if (lex_cmp(a.strata[i].candidate.lambda, b.strata[i].candidate.lambda) != 0) return false;
        if (a.strata[i].dim_L != b.strata[i].dim_L || a.strata[i].dim_flag != b.strata[i].dim_flag)
            return false;
    }
    return true;
}

void criterion6() {
    std::string why;
    bool ok = true;
    int ran = 0;
    for (Case& c : cases) {
        if (c.entry.type.rank > 2) continue;
        ++ran;
        WeightSystem ws = weight_system(c.datum, c.weight);
        EnumOptions ex;
        ex.exhaustive = true;
        std::vector<Candidate> pruned = enumerate_candidates(ws, {});
        std::vector<Candidate> full = enumerate_candidates(ws, ex);
        bool same = pruned.size() == full.size();
        for (std::size_t i = 0; same && i < pruned.size(); ++i)
            same = lex_cmp(pruned[i].lambda, full[i].lambda) == 0;
        same = same && reports_equal(analyze(ws, {}), analyze(ws, ex));
        if (!same) {
            ok = false;
            why += c.entry.name() + "; ";
        }
    }
    line(6, ok, "rank <= 2: pruned enumeration equals the unbounded exhaustive oracle",
         "ran " + std::to_string(ran) + " entries" + (why.empty() ? "" : "; failed " + why));
}

void criterion7() {
    bool ok = true;
    std::string why;
    for (auto [s, rk, fw] : std::vector<std::tuple<Series, int, std::vector<long>>>{
             {Series::A, 3, {0, 2, 0}}, {Series::C, 4, {0, 0, 0, 1}}}) {
        RootDatum d = build({s, rk});
        WeightSystem ws = weight_system(d, make_weight(d, fw));
        Report base;
        base.type = d.type;
        base.weight = fw;
        base.result = analyze(ws, {});
        std::string one = report_to_json(base, d).dump();
        for (int n : {2, 8}) {
            EnumOptions o;
            o.threads = n;
            Report r = base;
            r.result = analyze(ws, o);
            if (report_to_json(r, d).dump() != one) {
                ok = false;
                why += d.type.name() + " differs at " + std::to_string(n) + " threads; ";
            }
        }

        // doubling every weight rescales directions and nothing else
        WeightSystem w2 = ws;
        w2.entries.clear();
        for (const auto& [mu, m] : ws.entries) w2.entries[scaled(mu, Rat(2))] = m;
        w2.highest.euclid = scaled(ws.highest.euclid, Rat(2));
        NullconeReport r2 = analyze(w2);
        const NullconeReport& r1 = base.result;
        bool inv = r1.num_components == r2.num_components && r1.strata.size() == r2.strata.size();
        for (std::size_t i = 0; inv && i < r1.strata.size(); ++i)
            inv = r1.strata[i].dim_L == r2.strata[i].dim_L &&
                  r1.strata[i].dim_flag == r2.strata[i].dim_flag &&
                  r1.strata[i].dim_total == r2.strata[i].dim_total &&
                  lex_cmp(scaled(r1.strata[i].candidate.lambda, Rat(2)),
                          r2.strata[i].candidate.lambda) == 0;
        if (!inv) {
            ok = false;
            why += d.type.name() + " scaling invariance broken; ";
        }
    }
    line(7, ok, "byte-identical reports across 1/2/8 threads; scaling invariance", why);
}

void criterion8() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coord(-5, 5);
    bool ok = true;
    int checked = 0;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int dim = 1 + trial % 4;
        int count = 1 + static_cast<int>(rng() % 6);
        std::vector<QVec> P;
        for (int i = 0; i < count; ++i) {
            QVec v(dim);
            for (int t = 0; t < dim; ++t) v[t] = coord(rng);
            P.push_back(v);
        }
        QVec q = min_norm_point_hull(P);
        // optimality certificate: q in hull, every generator on the far side
        if (!in_hull(q, P)) ok = false;
        for (const QVec& v : P)
            if (dot(sub(v, q), q) < 0) ok = false;
        // brute-force face enumeration
        std::optional<QVec> best;
        for (std::size_t mask = 1; mask < (std::size_t(1) << count); ++mask) {
            std::vector<int> idx;
            for (int i = 0; i < count; ++i)
                if (mask & (std::size_t(1) << i)) idx.push_back(i);
            QVec y;
            std::vector<Rat> bary;
            if (!nullcone::detail::affine_min_norm_bary(P, idx, y, bary)) continue;
            bool inside = true;
            for (const Rat& b : bary)
                if (b < 0) inside = false;
            if (!inside) continue;
            if (!best || norm2(y) < norm2(*best)) best = y;
        }
        if (!best || lex_cmp(*best, q) != 0) ok = false;
        ++checked;
    }
    line(8, ok, "minimum-norm certificates on 1000 randomized instances",
         "checked " + std::to_string(checked));
}

void d8_note(bool stretch) {
    if (!stretch) {
        std::cout << "note: (D8, w8) computed independently only under NULLCONE_STRETCH=1; "
                     "the reported value 129 exceeds dim V = 128 and is never asserted"
                  << std::endl;
        return;
    }
    Case* c = find_case(Series::D, 8, {0, 0, 0, 0, 0, 0, 0, 1});
    const NullconeReport& r = report_of(*c, true);
    std::cout << "note: (D8, w8) computed dim " << r.dim_nullcone << " vs reported 129 (dim V = "
              << c->dim << "); components = " << r.num_components << std::endl;
    if (r.num_components != 1) all_ok = false;
}

}  // namespace

int main() {
    const char* env = std::getenv("NULLCONE_STRETCH");
    const bool stretch = env && std::string(env) == "1";
    load_catalog();
    criterion1();
    criterion2();
    criterion3(stretch);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    d8_note(stretch);
    std::cout << (all_ok ? "ALL PASS" : "FAILURES PRESENT") << std::endl;
    return all_ok ? 0 : 1;
}
