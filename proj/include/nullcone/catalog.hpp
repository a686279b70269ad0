#pragma once

// The classification catalog: every pair (R, lambda) whose algebra of
// invariants is free, organized in the traditional five lists, with the
// transcendence-degree class and the expected number of nullcone components
// attached to each entry.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "nullcone/rootsystem.hpp"

namespace nullcone {

inline constexpr const char* kCatalogVersion = "1";

struct CatalogEntry {
    RootSystemType type;
    std::vector<long> fw;               // highest weight over varpi_1..varpi_r
    std::vector<std::string> lists;     // membership among lists i..v (first = primary)
    std::string trdeg_class;            // zero | one | rank | other
    int expected_components = 1;
    std::optional<long> reference_dim_nullcone;
    bool reference_dim_caveat = false;      // reported value is suspect; do not assert

    std::string name() const {
        std::string s = type.name() + ", [";
        for (std::size_t i = 0; i < fw.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(fw[i]);
        }
        return s + "]";
    }
};

namespace detail {

inline std::vector<long> fw_single(int rank, int idx, long val = 1) {
    std::vector<long> v(rank, 0);
    v[idx - 1] = val;
    return v;
}

struct CatalogBuilder {
    std::vector<CatalogEntry> out;

    void add(const std::string& list, Series s, int rank, std::vector<long> fw) {
        for (CatalogEntry& e : out) {
            if (e.type.series == s && e.type.rank == rank && e.fw == fw) {
                e.lists.push_back(list);  // duplicate across lists: collapse
                return;
            }
        }
        CatalogEntry e;
        e.type = {s, rank};
        e.fw = std::move(fw);
        e.lists = {list};
        out.push_back(std::move(e));
    }

    bool in_list(const CatalogEntry& e, const std::string& list) const {
        for (const std::string& l : e.lists)
            if (l == list) return true;
        return false;
    }
};

}  // namespace detail

// All catalog entries with rank-parameterized families instantiated up to
// max_rank. Duplicates across lists appear once, carrying both memberships.
inline std::vector<CatalogEntry> catalog_entries(int max_rank = 8) {
    if (max_rank < 1) throw ValidationError("catalog_entries: max_rank must be >= 1");
    using detail::fw_single;
    detail::CatalogBuilder b;
    const int R = max_rank;

    // (i) adjoint modules
    for (int r = 1; r <= R; ++r) {
        std::vector<long> fw(r, 0);
        fw[0] += 1;
        fw[r - 1] += 1;  // varpi_1 + varpi_r (2*varpi_1 when r = 1)
        b.add("i", Series::A, r, fw);
    }
    for (int r = 3; r <= R; ++r) b.add("i", Series::B, r, fw_single(r, 2));
    for (int r = 4; r <= R; ++r) b.add("i", Series::D, r, fw_single(r, 2));
    for (int r = 2; r <= R; ++r) b.add("i", Series::C, r, fw_single(r, 1, 2));
    if (R >= 6) b.add("i", Series::E, 6, fw_single(6, 2));
    if (R >= 7) b.add("i", Series::E, 7, fw_single(7, 1));
    if (R >= 8) b.add("i", Series::E, 8, fw_single(8, 8));
    if (R >= 4) b.add("i", Series::F, 4, fw_single(4, 1));
    if (R >= 2) b.add("i", Series::G, 2, fw_single(2, 2));

    // (ii) isotropy modules of symmetric spaces
    for (int r = 3; r <= R; ++r) b.add("ii", Series::B, r, fw_single(r, 1));
    for (int r = 4; r <= R; ++r) b.add("ii", Series::D, r, fw_single(r, 1));
    if (R >= 3) b.add("ii", Series::A, 3, fw_single(3, 2));
    b.add("ii", Series::A, 1, fw_single(1, 1, 2));
    for (int r = 3; r <= R; ++r) b.add("ii", Series::B, r, fw_single(r, 1, 2));
    for (int r = 4; r <= R; ++r) b.add("ii", Series::D, r, fw_single(r, 1, 2));
    if (R >= 3) b.add("ii", Series::A, 3, fw_single(3, 2, 2));
    if (R >= 2) b.add("ii", Series::C, 2, fw_single(2, 1, 2));
    b.add("ii", Series::A, 1, fw_single(1, 1, 4));
    for (int r = 2; r <= R; ++r) b.add("ii", Series::C, r, fw_single(r, 2));
    if (R >= 7) b.add("ii", Series::A, 7, fw_single(7, 4));
    if (R >= 4) b.add("ii", Series::B, 4, fw_single(4, 4));
    if (R >= 4) b.add("ii", Series::C, 4, fw_single(4, 4));
    if (R >= 8) b.add("ii", Series::D, 8, fw_single(8, 8));
    if (R >= 4) b.add("ii", Series::F, 4, fw_single(4, 4));

    // (iii) trivial algebra of invariants
    for (int r = 1; r <= R; ++r) b.add("iii", Series::A, r, fw_single(r, 1));
    for (int r = 4; r <= R; r += 2) b.add("iii", Series::A, r, fw_single(r, 2));
    for (int r = 2; r <= R; ++r) b.add("iii", Series::C, r, fw_single(r, 1));
    if (R >= 5) b.add("iii", Series::D, 5, fw_single(5, 5));

    // (iv) one-dimensional quotient, beyond (i) and (ii)
    for (int r = 2; r <= R; ++r) b.add("iv", Series::A, r, fw_single(r, 1, 2));
    for (int r = 5; r <= R; r += 2) b.add("iv", Series::A, r, fw_single(r, 2));
    b.add("iv", Series::A, 1, fw_single(1, 1, 3));
    if (R >= 5) b.add("iv", Series::A, 5, fw_single(5, 3));
    if (R >= 6) b.add("iv", Series::A, 6, fw_single(6, 3));
    if (R >= 7) b.add("iv", Series::A, 7, fw_single(7, 3));
    if (R >= 3) b.add("iv", Series::B, 3, fw_single(3, 3));
    if (R >= 5) b.add("iv", Series::B, 5, fw_single(5, 5));
    if (R >= 3) b.add("iv", Series::C, 3, fw_single(3, 3));
    if (R >= 6) b.add("iv", Series::D, 6, fw_single(6, 6));
    if (R >= 7) b.add("iv", Series::D, 7, fw_single(7, 7));
    if (R >= 2) b.add("iv", Series::G, 2, fw_single(2, 1));
    if (R >= 6) b.add("iv", Series::E, 6, fw_single(6, 1));
    if (R >= 7) b.add("iv", Series::E, 7, fw_single(7, 7));

    // (v) the remaining three
    if (R >= 2) b.add("v", Series::A, 2, fw_single(2, 1, 3));
    if (R >= 8) b.add("v", Series::A, 8, fw_single(8, 3));
    if (R >= 6) b.add("v", Series::B, 6, fw_single(6, 6));

    for (CatalogEntry& e : b.out) {
        // transcendence-degree class; the six trdeg-1 entries inside lists
        // (i)/(ii) take precedence over the adjoint marker ((A1, 2w1) has
        // rank 1, so both readings agree there).
        auto is = [&](Series s, int r, std::vector<long> fw) {
            return e.type.series == s && e.type.rank == r && e.fw == fw;
        };
        bool remark_one =
            (e.type.series == Series::B && e.fw == fw_single(e.type.rank, 1)) ||
            (e.type.series == Series::D && e.fw == fw_single(e.type.rank, 1)) ||
            is(Series::A, 3, fw_single(3, 2)) || is(Series::C, 2, fw_single(2, 2)) ||
            is(Series::A, 1, fw_single(1, 1, 2)) || is(Series::B, 4, fw_single(4, 4));
        if (b.in_list(e, "iii"))
            e.trdeg_class = "zero";
        else if (b.in_list(e, "iv") || remark_one)
            e.trdeg_class = "one";
        else if (b.in_list(e, "i"))
            e.trdeg_class = "rank";
        else
            e.trdeg_class = "other";

        // reducible cases: exactly (D_r, 2w1), (A3, 2w2), (A7, w4)
        bool reducible = (e.type.series == Series::D && e.fw == fw_single(e.type.rank, 1, 2)) ||
                         is(Series::A, 3, fw_single(3, 2, 2)) ||
                         is(Series::A, 7, fw_single(7, 4));
        e.expected_components = reducible ? 2 : 1;

        if (is(Series::A, 8, fw_single(8, 3))) e.reference_dim_nullcone = 80;
        if (is(Series::B, 6, fw_single(6, 6))) e.reference_dim_nullcone = 62;
        if (is(Series::C, 4, fw_single(4, 4))) e.reference_dim_nullcone = 36;
        if (is(Series::F, 4, fw_single(4, 4))) e.reference_dim_nullcone = 24;
        if (is(Series::A, 7, fw_single(7, 4))) e.reference_dim_nullcone = 63;
        if (is(Series::D, 8, fw_single(8, 8))) {
            e.reference_dim_nullcone = 129;  // exceeds dim V = 128; reported, never asserted
            e.reference_dim_caveat = true;
        }
    }
    return b.out;
}

struct Expectation {
    int components = 1;
    std::optional<long> dim_nullcone;  // binding constraint, when known
};

// Expected component count and, when the transcendence-degree class or a
// reliable reported value pins it, the expected nullcone dimension.
inline Expectation expected(const CatalogEntry& e, long dim_module) {
    Expectation x;
    x.components = e.expected_components;
    if (e.trdeg_class == "zero")
        x.dim_nullcone = dim_module;
    else if (e.trdeg_class == "one")
        x.dim_nullcone = dim_module - 1;
    else if (e.trdeg_class == "rank")
        x.dim_nullcone = dim_module - e.type.rank;
    else if (e.reference_dim_nullcone && !e.reference_dim_caveat)
        x.dim_nullcone = *e.reference_dim_nullcone;
    return x;
}

inline nlohmann::ordered_json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::ordered_json j;
    j["version"] = kCatalogVersion;
    j["entries"] = nlohmann::ordered_json::array();
    for (const CatalogEntry& e : entries) {
        nlohmann::ordered_json je;
        je["series"] = std::string(1, static_cast<char>(e.type.series));
        je["rank"] = e.type.rank;
        je["weight"] = e.fw;
        je["lists"] = e.lists;
        je["trdeg_class"] = e.trdeg_class;
        je["expected_components"] = e.expected_components;
        if (e.reference_dim_nullcone)
            je["reference_dim_nullcone"] = *e.reference_dim_nullcone;
        else
            je["reference_dim_nullcone"] = nullptr;
        je["reference_dim_caveat"] = e.reference_dim_caveat;
        j["entries"].push_back(std::move(je));
    }
    return j;
}

inline std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j) {
    if (j.at("version").get<std::string>() != kCatalogVersion)
        throw ValidationError("unsupported catalog version");
    std::vector<CatalogEntry> out;
    for (const auto& je : j.at("entries")) {
        CatalogEntry e;
        e.type.series = parse_series(je.at("series").get<std::string>());
        e.type.rank = je.at("rank").get<int>();
        e.fw = je.at("weight").get<std::vector<long>>();
        e.lists = je.at("lists").get<std::vector<std::string>>();
        e.trdeg_class = je.at("trdeg_class").get<std::string>();
        e.expected_components = je.at("expected_components").get<int>();
        if (!je.at("reference_dim_nullcone").is_null())
            e.reference_dim_nullcone = je.at("reference_dim_nullcone").get<long>();
        e.reference_dim_caveat = je.at("reference_dim_caveat").get<bool>();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace nullcone
