#include "asmdpp/asm.hpp"
#include "asmdpp/dpp.hpp"
#include "asmdpp/formulas.hpp"
#include "asmdpp/lattice_paths.hpp"
#include "asmdpp/limits.hpp"
#include "asmdpp/matrices.hpp"
#include "asmdpp/serialize.hpp"
#include "asmdpp/six_vertex.hpp"
#include "asmdpp/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace asmdpp;
namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One enumerated object as a JSON value plus its one-line text form.
struct Record {
    json value;
    std::string text;
};

std::string sixvertex_text(const SixVertexConfig& c) {
    std::string s;
    for (std::size_t i = 0; i < c.grid().size(); ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < c.grid()[i].size(); ++j) {
            if (j) s += ',';
            s += type_name(c.grid()[i][j]);
        }
    }
    return s;
}

std::string nilp_text(const PathFamily& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ' ';
        s += f[i].steps.empty() ? "." : f[i].steps;
    }
    return s;
}

// Rebuilds a record from its JSON form; every cache line goes through the
// module parser so a corrupt cache is rejected instead of echoed.
Record record_from_json(const std::string& kind, const json& j, std::size_t n) {
    if (kind == "asm") {
        Asm a = asm_from_json(j);
        return {to_json(a), a.to_compact()};
    }
    if (kind == "dpp") {
        Dpp d = dpp_from_json(j);
        std::string t = d.to_compact();
        return {to_json(d), t.empty() ? "()" : t};
    }
    if (kind == "sixvertex") {
        SixVertexConfig c = sixvertex_from_json(j);
        return {to_json(c), sixvertex_text(c)};
    }
    PathFamily f = nilp_from_json(j, n);
    return {to_json(f), nilp_text(f)};
}

void for_each_record(const std::string& kind, std::size_t n, const std::function<void(const Record&)>& visit) {
    if (kind == "asm")
        for_each_asm(n, [&](const Asm& a) { visit({to_json(a), a.to_compact()}); });
    else if (kind == "dpp")
        for_each_dpp(n, [&](const Dpp& d) {
            std::string t = d.to_compact();
            visit({to_json(d), t.empty() ? "()" : t});
        });
    else if (kind == "sixvertex")
        for_each_asm(n, [&](const Asm& a) {
            SixVertexConfig c = asm_to_6v(a);
            visit({to_json(c), sixvertex_text(c)});
        });
    else if (kind == "nilp")
        for_each_dpp(n, [&](const Dpp& d) {
            PathFamily f = dpp_to_nilp(d, n);
            visit({to_json(f), nilp_text(f)});
        });
    else
        throw UsageError("unknown kind '" + kind + "'");
}

// Streams from <dir>/<kind>-<n>.ndjson when present, otherwise enumerates
// and writes that file.
void for_each_cached(const std::string& kind, std::size_t n, const fs::path& dir,
                     const std::function<void(const Record&)>& visit) {
    check_enumeration_limit(n, "enumeration");
    fs::path file = dir / (kind + "-" + std::to_string(n) + ".ndjson");
    if (fs::exists(file)) {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) visit(record_from_json(kind, json::parse(line), n));
        return;
    }
    fs::create_directories(dir);
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        for_each_record(kind, n, [&](const Record& r) {
            out << r.value.dump() << '\n';
            visit(r);
        });
    }
    fs::rename(tmp, file);
}

// Stops the enumeration once the limit is reached.
struct LimitReached {};

int cmd_enumerate(const std::string& kind, std::size_t n, const std::string& format, std::optional<std::size_t> limit,
                  const std::string& output, const std::string& cache) {
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw UsageError("cannot open output file " + output);
    }
    std::ostream& out = output.empty() ? std::cout : file;
    std::size_t emitted = 0;
    auto visit = [&](const Record& r) {
        if (limit && emitted >= *limit) throw LimitReached{};
        out << (format == "json" ? r.value.dump() : r.text) << '\n';
        ++emitted;
    };
    try {
        if (cache.empty())
            for_each_record(kind, n, visit);
        else
            for_each_cached(kind, n, cache, visit);
    } catch (const LimitReached&) {
    }
    return kExitPass;
}

int cmd_genfunc(std::size_t n, const std::string& method, const std::string& format, bool dump_matrix) {
    MultiPoly p;
    if (method == "det")
        p = genfunc_det(n);
    else if (method == "det-w")
        p = genfunc_det_w(n);
    else if (method == "brute-asm")
        p = z_asm_brute(n);
    else
        p = z_dpp_brute(n);
    if (dump_matrix) {
        if (method != "det" && method != "det-w") throw UsageError("--dump-matrix needs a determinant method");
        json m = to_json(method == "det" ? m_bar(n, true) : m_bar_w(n, true));
        std::cout << m.dump() << '\n';
    }
    if (format == "json")
        std::cout << json{{"n", n}, {"method", method}, {"polynomial", p.to_string()}, {"terms", to_json(p)}}.dump()
                  << '\n';
    else
        std::cout << p.to_string() << '\n';
    return kExitPass;
}

int cmd_table(std::size_t n) {
    auto rows = stat_table(n);
    std::cout << "p,m,k,asm_count,dpp_count,equal\n";
    bool ok = true;
    for (const TableRow& r : rows) {
        ok = ok && r.equal();
        std::cout << r.p << ',' << r.m << ',' << r.k << ',' << r.asm_count << ',' << r.dpp_count << ','
                  << (r.equal() ? "true" : "false") << '\n';
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_formula(const std::string& name, std::size_t n, std::optional<std::size_t> k) {
    if (name == "asm-total")
        std::cout << asm_total(n) << '\n';
    else if (name == "refined") {
        if (!k) throw UsageError("refined needs --k");
        std::cout << refined_total(n, *k) << '\n';
    } else if (name == "vsasm")
        std::cout << vsasm_total(n) << '\n';
    else if (name == "q-product")
        std::cout << q_product(n).to_string() << '\n';
    else
        std::cout << z_mu_zero(n).to_string() << '\n';
    return kExitPass;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> max_n, std::uint64_t seed,
               const std::string& report, bool timing) {
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    if (suite != "all" && !is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    VerifyOptions opts;
    opts.max_n = max_n;
    opts.seed = seed;
    auto reports = run_suites(names, opts);
    std::cout << (report == "json" ? format_json(reports, timing) : format_text(reports, timing));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.passed(); });
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification for ASMs and DPPs"};
    app.require_subcommand(1);

    std::size_t n = 0;
    std::string kind, format = "text", output, cache, method = "det", report = "text", suite = "all", name;
    std::optional<std::size_t> limit, max_n, k;
    std::uint64_t seed = 1;
    bool dump_matrix = false, timing = false;

    auto* en = app.add_subcommand("enumerate", "list every object of a family, one per line");
    en->add_option("--kind", kind, "asm, dpp, sixvertex or nilp")
        ->required()
        ->check(CLI::IsMember({"asm", "dpp", "sixvertex", "nilp"}));
    en->add_option("--n", n)->required();
    en->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    en->add_option("--limit", limit, "stop after this many records");
    en->add_option("--output", output, "write to a file instead of stdout");
    en->add_option("--cache", cache, "directory of NDJSON cache files");

    auto* gf = app.add_subcommand("genfunc", "print the generating polynomial in x, y, z (and w)");
    gf->add_option("--n", n)->required();
    gf->add_option("--method", method)->check(CLI::IsMember({"det", "brute-asm", "brute-dpp", "det-w"}));
    gf->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    gf->add_flag("--dump-matrix", dump_matrix, "print the determinant matrix as JSON first");

    auto* tb = app.add_subcommand("table", "CSV of ASM and DPP counts per (p, m, k)");
    tb->add_option("--n", n)->required();

    auto* fm = app.add_subcommand("formula", "evaluate a closed formula");
    fm->add_option("--name", name, "asm-total, refined, vsasm, q-product or mu-zero")
        ->required()
        ->check(CLI::IsMember({"asm-total", "refined", "vsasm", "q-product", "mu-zero"}));
    fm->add_option("--n", n)->required();
    fm->add_option("--k", k);

    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("--suite", suite, "all or one suite name");
    vf->add_option("--max-n", max_n, "cap on n for every suite");
    vf->add_option("--seed", seed);
    vf->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    vf->add_flag("--timing", timing, "include elapsed times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*en) return cmd_enumerate(kind, n, format, limit, output, cache);
        if (*gf) return cmd_genfunc(n, method, format, dump_matrix);
        if (*tb) return cmd_table(n);
        if (*fm) return cmd_formula(name, n, k);
        return cmd_verify(suite, max_n, seed, report, timing);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
