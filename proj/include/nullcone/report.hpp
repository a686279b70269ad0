#pragma once

// Machine- and human-readable views of a NullconeReport. Rationals are
// serialized as "p/q" strings so round-trips are lossless; machine formats
// carry no timing so identical inputs produce identical bytes.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "nullcone/strata.hpp"

namespace nullcone {

struct Report {
    RootSystemType type;
    std::vector<long> weight;
    NullconeReport result;
};

namespace detail {

inline std::vector<std::string> lambda_fw_strings(const RootDatum& d, const QVec& lambda) {
    std::vector<std::string> out;
    for (int i = 0; i < d.rank(); ++i) out.push_back(rat_str(d.coroot_pair(lambda, i)));
    return out;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const Report& r, const RootDatum& d) {
    nlohmann::ordered_json j;
    j["type"] = std::string(1, static_cast<char>(r.type.series));
    j["rank"] = r.type.rank;
    j["weight"] = r.weight;
    j["dim_module"] = r.result.dim_module;
    j["dim_nullcone"] = r.result.dim_nullcone;
    j["num_components"] = r.result.num_components;
    j["subsets_visited"] = r.result.subsets_visited;
    j["strata"] = nlohmann::ordered_json::array();
    for (const Stratum& s : r.result.strata) {
        nlohmann::ordered_json js;
        js["lambda_fw"] = detail::lambda_fw_strings(d, s.candidate.lambda);
        js["norm2"] = rat_str(s.candidate.norm2);
        js["dim_L"] = s.dim_L;
        js["dim_flag"] = s.dim_flag;
        js["dim_total"] = s.dim_total;
        j["strata"].push_back(std::move(js));
    }
    return j;
}

inline std::string report_to_tsv(const Report& r, const RootDatum& d) {
    std::ostringstream os;
    os << "type\trank\tweight\tdim_module\tdim_nullcone\tnum_components\tsubsets_visited\n";
    os << static_cast<char>(r.type.series) << "\t" << r.type.rank << "\t";
    for (std::size_t i = 0; i < r.weight.size(); ++i) os << (i ? "," : "") << r.weight[i];
    os << "\t" << r.result.dim_module << "\t" << r.result.dim_nullcone << "\t"
       << r.result.num_components << "\t" << r.result.subsets_visited << "\n";
    os << "lambda_fw\tnorm2\tdim_L\tdim_flag\tdim_total\n";
    for (const Stratum& s : r.result.strata) {
        auto fw = detail::lambda_fw_strings(d, s.candidate.lambda);
        for (std::size_t i = 0; i < fw.size(); ++i) os << (i ? "," : "") << fw[i];
        os << "\t" << rat_str(s.candidate.norm2) << "\t" << s.dim_L << "\t" << s.dim_flag
           << "\t" << s.dim_total << "\n";
    }
    return os.str();
}

inline std::string report_to_table(const Report& r, const RootDatum& d) {
    std::ostringstream os;
    os << "module (" << r.type.name() << ", [";
    for (std::size_t i = 0; i < r.weight.size(); ++i) os << (i ? "," : "") << r.weight[i];
    os << "])\n";
    os << "  dim V          = " << r.result.dim_module << "\n";
    os << "  dim nullcone   = " << r.result.dim_nullcone << "\n";
    os << "  components     = " << r.result.num_components << "\n";
    os << "  strata (" << r.result.strata.size() << "), subsets visited "
       << r.result.subsets_visited << ":\n";
    for (const Stratum& s : r.result.strata) {
        os << "    lambda=[";
        auto fw = detail::lambda_fw_strings(d, s.candidate.lambda);
        for (std::size_t i = 0; i < fw.size(); ++i) os << (i ? "," : "") << fw[i];
        os << "] |lambda|^2=" << rat_str(s.candidate.norm2) << " dim_L=" << s.dim_L
           << " dim_flag=" << s.dim_flag << " dim_total=" << s.dim_total << "\n";
    }
    return os.str();
}

}  // namespace nullcone
