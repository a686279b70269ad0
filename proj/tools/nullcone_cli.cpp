// Command-line front end: analyze one module, verify the whole catalog,
// dump weight systems, list the catalog.
//
// Exit codes: 0 success / all pass, 1 verification mismatch, 2 usage error,
// 3 resource budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "nullcone/nullcone.hpp"

namespace {

using namespace nullcone;

std::vector<long> parse_weight_coeffs(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw ValidationError("empty weight coefficient");
            out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    bool nonzero = false;
    for (long x : out) {
        if (x < 0) throw ValidationError("weight coefficients must be nonnegative");
        if (x != 0) nonzero = true;
    }
    if (!nonzero) throw ValidationError("weight must not be zero");
    return out;
}

struct CommonOpts {
    std::string format = "human";
    int threads = 1;
    unsigned long max_subsets = 100'000'000;
    long dim_cap = kDefaultDimCap;
};

EnumOptions enum_opts(const CommonOpts& c) {
    EnumOptions o;
    o.threads = c.threads;
    o.max_subsets = c.max_subsets;
    return o;
}

int cmd_analyze(const std::string& type_s, int rank, const std::string& weight_s,
                const CommonOpts& c) {
    RootSystemType t{parse_series(type_s), rank};
    RootDatum d = build(t);
    std::vector<long> fw = parse_weight_coeffs(weight_s);
    Weight lam = make_weight(d, fw);

    auto t0 = std::chrono::steady_clock::now();
    WeightSystem ws = weight_system(d, lam, c.dim_cap);
    Report r{t, fw, analyze(ws, enum_opts(c))};
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    if (c.format == "json")
        std::cout << report_to_json(r, d).dump(2) << "\n";
    else if (c.format == "tsv")
        std::cout << report_to_tsv(r, d);
    else {
        std::cout << report_to_table(r, d);
        std::cerr << "elapsed " << ms << " ms\n";
    }
    return 0;
}

int cmd_weights(const std::string& type_s, int rank, const std::string& weight_s,
                const CommonOpts& c) {
    RootSystemType t{parse_series(type_s), rank};
    RootDatum d = build(t);
    Weight lam = make_weight(d, parse_weight_coeffs(weight_s));
    WeightSystem ws = weight_system(d, lam, c.dim_cap);

    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["type"] = type_s;
        j["rank"] = rank;
        j["weight"] = lam.fw;
        j["dim"] = ws.dim;
        j["weights"] = nlohmann::ordered_json::array();
        for (const auto& [mu, m] : ws.entries) {
            nlohmann::ordered_json jw;
            std::vector<std::string> fws, eus;
            for (int i = 0; i < d.rank(); ++i) fws.push_back(rat_str(d.coroot_pair(mu, i)));
            for (const Rat& x : mu) eus.push_back(rat_str(x));
            jw["fw"] = fws;
            jw["euclid"] = eus;
            jw["multiplicity"] = m;
            j["weights"].push_back(std::move(jw));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fw\teuclid\tmultiplicity\n";
        for (const auto& [mu, m] : ws.entries) {
            for (int i = 0; i < d.rank(); ++i)
                std::cout << (i ? "," : "") << rat_str(d.coroot_pair(mu, i));
            std::cout << "\t" << qvec_str(mu) << "\t" << m << "\n";
        }
        std::cout << "total\t\t" << ws.dim << "\n";
    }
    return 0;
}

int cmd_verify(int max_rank, const CommonOpts& c) {
    bool all_pass = true;
    std::vector<std::string> failures;
    for (const CatalogEntry& e : catalog_entries(max_rank)) {
        RootDatum d = build(e.type);
        Weight lam = make_weight(d, e.fw);
        long dim = weyl_dim(d, lam);
        if (dim > c.dim_cap) {
            std::cout << "SKIP (" << e.name() << ") dim V=" << dim << " > cap " << c.dim_cap
                      << "\n";
            continue;
        }
        WeightSystem ws = weight_system(d, lam, c.dim_cap);
        NullconeReport rep = analyze(ws, enum_opts(c));
        Expectation x = expected(e, dim);
        bool ok = rep.num_components == x.components;
        if (x.dim_nullcone && rep.dim_nullcone != *x.dim_nullcone) ok = false;
        std::cout << (ok ? "PASS" : "FAIL") << " (" << e.name() << ") dim V=" << dim
                  << " dim N=" << rep.dim_nullcone << " components=" << rep.num_components
                  << " expected=" << x.components;
        if (x.dim_nullcone) std::cout << " expected dim N=" << *x.dim_nullcone;
        if (e.reference_dim_caveat && e.reference_dim_nullcone)
            std::cout << " [reported value " << *e.reference_dim_nullcone
                      << " not asserted; computed " << rep.dim_nullcone << "]";
        std::cout << "\n";
        if (!ok) {
            all_pass = false;
            failures.push_back(e.name());
        }
    }
    if (!all_pass) {
        std::cout << "FAILURES:";
        for (const std::string& f : failures) std::cout << " (" << f << ")";
        std::cout << "\n";
        return 1;
    }
    return 0;
}

int cmd_list_catalog(int max_rank, const CommonOpts& c) {
    std::vector<CatalogEntry> entries = catalog_entries(max_rank);
    if (c.format == "json") {
        std::cout << catalog_to_json(entries).dump(2) << "\n";
    } else {
        for (const CatalogEntry& e : entries) {
            std::cout << "(" << e.name() << ") lists=";
            for (std::size_t i = 0; i < e.lists.size(); ++i)
                std::cout << (i ? "," : "") << e.lists[i];
            std::cout << " trdeg=" << e.trdeg_class
                      << " expected_components=" << e.expected_components;
            if (e.reference_dim_nullcone)
                std::cout << " reference_dim=" << *e.reference_dim_nullcone
                          << (e.reference_dim_caveat ? " (caveat)" : "");
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact instability stratification of nullcones"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string type_s;
    int rank = 0;
    std::string weight_s;
    int max_rank = 8;

    auto add_common = [&](CLI::App* sub, bool with_dim_cap = true) {
        sub->add_option("--format", common.format, "human | json | tsv")
            ->check(CLI::IsMember({"human", "json", "tsv"}));
        sub->add_option("--threads", common.threads, "parallelism degree");
        sub->add_option("--max-subsets", common.max_subsets, "subset enumeration budget");
        if (with_dim_cap)
            sub->add_option("--dim-cap", common.dim_cap, "module dimension cap");
    };
    auto add_module = [&](CLI::App* sub) {
        sub->add_option("--type", type_s, "root-system series A..G")->required();
        sub->add_option("--rank", rank, "rank")->required();
        sub->add_option("--weight", weight_s, "comma-separated fundamental-weight coefficients")
            ->required();
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "stratify one module");
    add_module(analyze_cmd);
    add_common(analyze_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check the whole catalog against expectations");
    verify_cmd->add_option("--max-rank", max_rank, "instantiate rank families up to this rank");
    add_common(verify_cmd);
    common.dim_cap = kDefaultDimCap;

    CLI::App* weights_cmd = app.add_subcommand("weights", "dump a weight system");
    add_module(weights_cmd);
    add_common(weights_cmd);

    CLI::App* list_cmd = app.add_subcommand("list-catalog", "print the catalog");
    list_cmd->add_option("--max-rank", max_rank, "instantiate rank families up to this rank");
    list_cmd->add_option("--format", common.format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(type_s, rank, weight_s, common);
        if (weights_cmd->parsed()) return cmd_weights(type_s, rank, weight_s, common);
        if (verify_cmd->parsed()) {
            if (verify_cmd->count("--dim-cap") == 0) common.dim_cap = 70;
            return cmd_verify(max_rank, common);
        }
        if (list_cmd->parsed()) return cmd_list_catalog(max_rank, common);
    } catch (const ResourceError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
