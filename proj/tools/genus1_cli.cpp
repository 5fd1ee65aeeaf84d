// Command-line front end: genus evaluation, colored-partition representation,
// reduction, counting tables, series expansion, verification, enumeration.
//
// Exit codes: 0 success, 1 domain error (bad input object), 2 usage error,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "genus1/genus1.hpp"

namespace {

using namespace genus1;
using nlohmann::json;

std::string quad(int a, int b, int c, int d) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

std::string cycles_or_empty(const Permutation& p) {
    std::string s = format_cycles(p);
    return s.empty() ? "()" : s;
}

std::string colored_text(const ColoredPartition& cp) {
    return format_partition(cp.partition) + "|ijkl=" +
           quad(cp.coloring.i, cp.coloring.j, cp.coloring.k, cp.coloring.l);
}

std::string genus1_type_name(const Permutation& alpha) {
    switch (classify_genus1(alpha)) {
        case Genus1Type::Partition: return "Partition";
        case Genus1Type::OneSimplyTwisted: return "OneSimplyTwisted";
        case Genus1Type::OneDoublyTwisted: return "OneDoublyTwisted";
        case Genus1Type::TwoSimplyTwisted: return "TwoSimplyTwisted";
    }
    return "NA";
}

int cmd_genus(const std::string& text, int n) {
    Permutation alpha = parse_cycles(text, n);
    int g = genus(alpha);
    std::cout << "genus=" << g << " cycles=" << alpha.cycle_count()
              << " backpoints=" << back_points(alpha).size()
              << " type=" << (g == 1 ? genus1_type_name(alpha) : "NA") << "\n";
    return 0;
}

int cmd_represent(const std::string& text, int n, bool all) {
    Permutation alpha = parse_cycles(text, n);
    if (genus(alpha) != 1)
        throw std::invalid_argument("represent: permutation is not of genus 1");
    if (all) {
        for (const auto& sp : all_quadruples(n)) {
            if (hypermap_genus(theta_of_separating(sp), alpha) != 0) continue;
            ColoredPartition rep = induced_representation(alpha, sp);
            std::cout << "separating=" << quad(sp.a, sp.b, sp.c, sp.d)
                      << " colored=" << colored_text(rep) << "\n";
        }
        return 0;
    }
    SeparatingPoints sp = is_reduced(alpha) ? canonical_separating(alpha)
                                            : find_separating(alpha);
    ColoredPartition rep = induced_representation(alpha, sp);
    std::cout << "separating=" << quad(sp.a, sp.b, sp.c, sp.d) << "\n"
              << "coloring=" << quad(rep.coloring.i, rep.coloring.j, rep.coloring.k,
                                     rep.coloring.l)
              << "\n"
              << "partition=" << format_partition(rep.partition) << "\n"
              << "colored=" << colored_text(rep) << "\n";
    return 0;
}

int cmd_reduce(const std::string& text, int n, bool trace) {
    Permutation alpha = parse_cycles(text, n);
    ReductionTrace tr = reduce_fully(alpha);
    if (trace)
        for (const auto& step : tr.steps) {
            std::cout << "removed=(";
            for (size_t i = 0; i < step.original_elements.size(); ++i)
                std::cout << (i ? "," : "") << step.original_elements[i];
            std::cout << ")\n";
        }
    std::cout << "reduced=" << cycles_or_empty(tr.result) << " n=" << tr.result.size() << "\n";
    return 0;
}

struct CountRow {
    long n, k;
    mpz_class count;
};

int cmd_count(const std::string& kind_s, bool reduced, const std::string& backpoints_s,
              long n_max, long k_filter, const std::string& format,
              const std::string& provenance, int jobs) {
    CountTable::Kind kind = kind_s == "partition" ? CountTable::Kind::Partition
                                                  : CountTable::Kind::Permutation;
    BackPoints bp = kind == CountTable::Kind::Partition ? BackPoints::Zero
                                                        : parse_backpoints(backpoints_s);
    std::vector<CountRow> rows;
    if (provenance == "formula") {
        for (long n = 0; n <= n_max; ++n)
            for (long k = 0; k <= n; ++k) {
                mpz_class v = reduced ? reduced_count(n, k, bp) : full_count(n, k, bp);
                if (v != 0) rows.push_back({n, k, v});
            }
    } else if (provenance == "bruteforce") {
        BruteTable t = brute_table(kind, static_cast<int>(n_max), jobs);
        int bpsel = bp == BackPoints::Zero ? 0 : bp == BackPoints::One ? 1
                    : bp == BackPoints::Two ? 2 : -1;
        for (long n = 0; n <= n_max; ++n)
            for (long k = 0; k <= n; ++k) {
                long long v = t.sum(static_cast<int>(n), static_cast<int>(k), 1, bpsel,
                                    reduced ? 1 : -1);
                if (v != 0) rows.push_back({n, k, mpz_class(static_cast<long>(v))});
            }
    } else { // series
        static const char* reduced_names[] = {"R0", "R1", "R2", "Rstar"};
        static const char* full_names[] = {"P0", "P1", "P2", "Pstar"};
        int sel = bp == BackPoints::Zero ? 0 : bp == BackPoints::One ? 1
                  : bp == BackPoints::Two ? 2 : 3;
        BivariateSeries s =
            expand_named(reduced ? reduced_names[sel] : full_names[sel], static_cast<int>(n_max));
        for (long n = 0; n <= n_max; ++n)
            for (long k = 0; k <= n_max; ++k) {
                mpz_class v = s.coefficient_int(static_cast<int>(n), static_cast<int>(k));
                if (v != 0) rows.push_back({n, k, v});
            }
    }
    if (k_filter >= 0) {
        std::vector<CountRow> kept;
        for (auto& r : rows)
            if (r.k == k_filter) kept.push_back(std::move(r));
        rows = std::move(kept);
    }
    if (format == "csv") {
        for (const auto& r : rows) std::cout << r.n << ',' << r.k << ',' << r.count << "\n";
    } else if (format == "plain") {
        for (const auto& r : rows)
            std::cout << "n=" << r.n << " k=" << r.k << " count=" << r.count << "\n";
    } else { // json
        json out;
        out["schema_version"] = 1;
        out["metadata"] = {{"kind", kind_s},
                           {"reduced", reduced},
                           {"backpoints", kind == CountTable::Kind::Partition ? "0" : backpoints_s},
                           {"provenance", provenance}};
        out["counts"] = json::array();
        for (const auto& r : rows)
            out["counts"].push_back({{"n", r.n}, {"k", r.k}, {"count", r.count.get_str()}});
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_series(const std::string& name, int trunc, const std::string& format) {
    BivariateSeries s = expand_named(name, trunc);
    std::vector<std::tuple<int, int, mpz_class>> rows;
    for (int n = 0; n <= trunc; ++n)
        for (int k = 0; k <= trunc; ++k) {
            mpz_class v = s.coefficient_int(n, k);
            if (v != 0) rows.emplace_back(n, k, v);
        }
    if (format == "csv") {
        for (const auto& [n, k, v] : rows) std::cout << n << ',' << k << ',' << v << "\n";
    } else {
        json out;
        out["schema_version"] = 1;
        out["name"] = name;
        out["trunc"] = trunc;
        out["coefficients"] = json::array();
        for (const auto& [n, k, v] : rows)
            out["coefficients"].push_back({{"n", n}, {"k", k}, {"coefficient", v.get_str()}});
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(int n_max, bool as_json, int jobs) {
    VerifyReport report = verify_suite(n_max, jobs);
    if (as_json) {
        json out;
        out["schema_version"] = 1;
        out["n_max"] = n_max;
        out["all_pass"] = report.all_pass();
        out["checks"] = json::array();
        for (const auto& c : report.checks)
            out["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            if (c.pass)
                std::cout << "PASS " << c.name << "\n";
            else
                std::cout << "FAIL " << c.name << ": " << c.witness << "\n";
        }
        std::cout << (report.all_pass() ? "all checks passed" : "verification failed") << "\n";
    }
    return report.all_pass() ? 0 : 3;
}

int cmd_enumerate(const std::string& kind_s, int n, int genus_filter, int cycles_filter) {
    if (kind_s == "permutation") {
        enumerate_permutations(n, [&](const Permutation& a) {
            if (genus_filter >= 0 && genus(a) != genus_filter) return true;
            if (cycles_filter >= 0 && a.cycle_count() != cycles_filter) return true;
            std::cout << cycles_or_empty(a) << "\n";
            return true;
        });
    } else {
        if (n > kOracleLimitPartitions)
            throw std::invalid_argument("enumerate: n exceeds oracle limit");
        enumerate_set_partitions(n, [&](const SetPartition& p) {
            if (genus_filter >= 0 && genus_of_partition(p) != genus_filter) return true;
            if (cycles_filter >= 0 && p.block_count() != cycles_filter) return true;
            std::cout << format_partition(p) << "\n";
            return true;
        });
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for genus-1 permutations and partitions"};
    app.require_subcommand(1);

    std::string perm_text, kind = "permutation", backpoints = "any", format = "plain";
    std::string series_name, provenance = "formula";
    int n = 0, trunc = 0, jobs = 1;
    long n_max = 0, k_filter = -1;
    int genus_filter = -1, cycles_filter = -1;
    bool all = false, trace = false, as_json = false, reduced = false;

    auto* c_genus = app.add_subcommand("genus", "Genus and classification of a permutation");
    c_genus->add_option("perm", perm_text, "Permutation in cycle or one-line notation")
        ->required();
    c_genus->add_option("--n", n, "Number of points")->required();

    auto* c_repr = app.add_subcommand("represent", "Colored-partition representation");
    c_repr->add_option("perm", perm_text)->required();
    c_repr->add_option("--n", n)->required();
    c_repr->add_flag("--all", all, "List every separating quadruple");

    auto* c_reduce = app.add_subcommand("reduce", "Remove all trivial cycles");
    c_reduce->add_option("perm", perm_text)->required();
    c_reduce->add_option("--n", n)->required();
    c_reduce->add_flag("--trace", trace, "Print each removed cycle in original labels");

    auto* c_count = app.add_subcommand("count", "Genus-1 counting tables");
    c_count->add_option("--kind", kind)->check(CLI::IsMember({"partition", "permutation"}))
        ->required();
    c_count->add_flag("--reduced", reduced, "Count reduced objects only");
    c_count->add_option("--backpoints", backpoints)->check(CLI::IsMember({"0", "1", "2", "any"}));
    c_count->add_option("--n-max", n_max)->required();
    c_count->add_option("--k", k_filter, "Restrict to one cycle/block count");
    c_count->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "plain"}));
    c_count->add_option("--provenance", provenance)
        ->check(CLI::IsMember({"formula", "bruteforce", "series"}));
    c_count->add_option("--jobs", jobs, "Worker cap for brute-force sweeps");

    auto* c_series = app.add_subcommand("series", "Expand a named generating function");
    c_series->add_option("--name", series_name)->required();
    c_series->add_option("--trunc", trunc)->required();
    c_series->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* c_verify = app.add_subcommand("verify", "Run the cross-module invariant suite");
    c_verify->add_option("--n-max", n_max)->required();
    c_verify->add_flag("--json", as_json, "Machine-readable report");
    c_verify->add_option("--jobs", jobs, "Worker cap for brute-force sweeps");

    auto* c_enum = app.add_subcommand("enumerate", "Stream permutations or partitions");
    c_enum->add_option("--kind", kind)->check(CLI::IsMember({"partition", "permutation"}))
        ->required();
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--genus", genus_filter, "Keep only this genus");
    c_enum->add_option("--cycles", cycles_filter, "Keep only this cycle/block count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // series format default is csv; the shared default "plain" only applies to count
    if (c_series->parsed() && format == "plain") format = "csv";

    try {
        if (c_genus->parsed()) return cmd_genus(perm_text, n);
        if (c_repr->parsed()) return cmd_represent(perm_text, n, all);
        if (c_reduce->parsed()) return cmd_reduce(perm_text, n, trace);
        if (c_count->parsed())
            return cmd_count(kind, reduced, backpoints, n_max, k_filter, format, provenance,
                             jobs);
        if (c_series->parsed()) return cmd_series(series_name, trunc, format);
        if (c_verify->parsed()) return cmd_verify(static_cast<int>(n_max), as_json, jobs);
        if (c_enum->parsed()) return cmd_enumerate(kind, n, genus_filter, cycles_filter);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
