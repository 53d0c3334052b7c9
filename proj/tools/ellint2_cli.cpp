// Command-line front end: point evaluation, table reproduction, region data, benchmark.
//
// Exit codes: 0 success, 1 usage error, 2 numeric or domain error, 3 check failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ellint2/aux_expansions.hpp"
#include "ellint2/baseline.hpp"
#include "ellint2/core.hpp"
#include "ellint2/first_expansion.hpp"
#include "ellint2/second_expansion.hpp"
#include "ellint2/special.hpp"
#include "ellint2/tables.hpp"
#include "json.hpp"

namespace {

using namespace ellint2;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitCheck = 3;

// Ten significant digits, correctly rounded.
std::string num(double v)
{
    return fmt::format("{:.10g}", v);
}

struct EvalOptions {
    double lambda = 0;
    double k = 0;
    int order = 1;
    std::string method = "auto";
    double eps = 0.5;
    double delta = second::kDefaultDelta;
    bool oracle = false;
    bool check = false;
    std::string format = "text";
};

struct EvalOutput {
    Enclosure enclosure;
    std::optional<double> refined;
};

EvalOutput evaluate_with(const EvalOptions& o)
{
    const EvalPoint p(o.lambda, o.k);
    const ExpansionOrder n(o.order);
    std::string method = o.method;
    if (!p.interior()) {
        if (method != "auto") throw DomainError("explicit methods need an interior point");
        return {evaluate(p, n), std::nullopt};
    }
    if (method == "auto") method = (1 - o.lambda) <= (1 - o.k) ? "second" : "first";

    if (method == "first")
        return {first::enclose_first(p, n), first::refined_E_hat(p, n, o.eps).estimate};
    if (method == "second")
        return {second::enclose_second(p, n), second::refined_E_bar(p, n, o.delta).estimate};
    if (method == "aux-bf" || method == "aux-carlson") {
        const bool bf = method == "aux-bf";
        const auto r = bf ? aux::expansion_bf(p, n) : aux::expansion_carlson(p, n);
        return {{r.value, r.value - r.remainder_bound, r.value + r.remainder_bound,
                 bf ? Method::AuxByrdFriedman : Method::AuxCarlson, n},
                std::nullopt};
    }
    const auto b = baseline::cg_lopez_approx(p);
    return {{b.value, b.value + std::max(b.lopez_lower, b.cg_lower), b.value + std::min(b.lopez_upper, b.cg_upper),
             Method::Baseline, std::nullopt},
            std::nullopt};
}

int cmd_eval(const EvalOptions& o)
{
    const auto out = evaluate_with(o);
    const auto& e = out.enclosure;
    std::optional<double> exact;
    if (o.oracle || o.check) exact = special::oracle_E(EvalPoint(o.lambda, o.k));
    const int status = o.check && !e.contains(*exact) ? kExitCheck : kExitOk;
    const double rel_err = exact && *exact != 0 ? (*exact - e.estimate) / *exact : 0.0;

    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["lambda"] = o.lambda;
        j["k"] = o.k;
        j["method"] = std::string(to_string(e.method));
        j["order"] = e.order ? nlohmann::ordered_json(e.order->value()) : nlohmann::ordered_json(nullptr);
        j["estimate"] = e.estimate;
        if (out.refined) j["refined"] = *out.refined;
        j["lower"] = e.lower;
        j["upper"] = e.upper;
        if (exact) {
            j["oracle"] = *exact;
            j["rel_err"] = rel_err;
        }
        if (o.check) j["contained"] = status == kExitOk;
        std::cout << j.dump(2) << '\n';
        return status;
    }
    if (o.format == "csv") {
        std::cout << "lambda,k,method,order,estimate,refined,lower,upper,oracle,rel_err\n";
        std::cout << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", num(o.lambda), num(o.k), to_string(e.method),
                                 e.order ? std::to_string(e.order->value()) : "", num(e.estimate),
                                 out.refined ? num(*out.refined) : "", num(e.lower), num(e.upper),
                                 exact ? num(*exact) : "", exact ? num(rel_err) : "");
        return status;
    }
    std::cout << "method   " << to_string(e.method) << '\n';
    if (e.order) std::cout << "order    " << e.order->value() << '\n';
    std::cout << "estimate " << num(e.estimate) << '\n';
    if (out.refined) std::cout << "refined  " << num(*out.refined) << '\n';
    std::cout << "lower    " << num(e.lower) << '\n' << "upper    " << num(e.upper) << '\n';
    if (exact) {
        std::cout << "oracle   " << num(*exact) << '\n';
        std::cout << "rel_err  " << num(rel_err) << '\n';
    }
    if (o.check) std::cout << (status == kExitOk ? "check    contained\n" : "check    NOT CONTAINED\n");
    return status;
}

struct TableOptions {
    int which = 1;
    std::string format = "csv";
    bool check = false;
    double eps = 0.5;
    double delta = second::kDefaultDelta;
    std::string out;
};

void print_expansion_table(std::ostream& out, const std::vector<tables::TableRow>& rows, const std::string& format)
{
    if (format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            j.push_back({{"order", r.order}, {"lambda", r.lambda}, {"k", r.k}, {"E", r.exactE},
                         {"approx", r.approx}, {"refined", r.refined}, {"rel_err", r.rel_err},
                         {"rel_err_refined", r.rel_err_refined}, {"range", r.range}});
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "md") {
        out << "| N | lambda | k | E | approx | refined | rel_err | rel_err_refined | range |\n";
        out << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows)
            out << fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n", r.order, num(r.lambda), num(r.k),
                               num(r.exactE), num(r.approx), num(r.refined), num(r.rel_err), num(r.rel_err_refined),
                               num(r.range));
        return;
    }
    out << "lambda,k,E,approx,refined,rel_err,rel_err_refined,range\n";
    for (const auto& r : rows)
        out << fmt::format("{},{},{},{},{},{},{},{}\n", num(r.lambda), num(r.k), num(r.exactE), num(r.approx),
                           num(r.refined), num(r.rel_err), num(r.rel_err_refined), num(r.range));
}

void print_baseline_table(std::ostream& out, const std::vector<tables::BaselineRow>& rows, const std::string& format)
{
    if (format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            j.push_back({{"lambda", r.lambda}, {"k", r.k}, {"E", r.exactE}, {"approx", r.approx},
                         {"rel_err", r.rel_err}, {"delta1_star", r.delta1_star}, {"delta2_star", r.delta2_star}});
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "md") {
        out << "| lambda | k | E | approx | rel_err | delta1_star | delta2_star |\n";
        out << "|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows)
            out << fmt::format("| {} | {} | {} | {} | {} | {} | {} |\n", num(r.lambda), num(r.k), num(r.exactE),
                               num(r.approx), num(r.rel_err), num(r.delta1_star), num(r.delta2_star));
        return;
    }
    out << "lambda,k,E,approx,rel_err,delta1_star,delta2_star\n";
    for (const auto& r : rows)
        out << fmt::format("{},{},{},{},{},{},{}\n", num(r.lambda), num(r.k), num(r.exactE), num(r.approx),
                           num(r.rel_err), num(r.delta1_star), num(r.delta2_star));
}

int report_check(int which)
{
    const auto mismatches = tables::check_table(which);
    const auto total = tables::printed_table(which).size();
    for (const auto& m : mismatches)
        std::cout << fmt::format("MISMATCH table {} row {} {}: printed {} computed {:.6e}\n", which, m.row + 1,
                                 m.column, m.printed, m.computed);
    std::cout << fmt::format("check table {}: {}/{} entries match\n", which, total - mismatches.size(), total);
    return mismatches.empty() ? kExitOk : kExitCheck;
}

int cmd_table(const TableOptions& o)
{
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw std::runtime_error("cannot open " + o.out);
    }
    std::ostream& out = o.out.empty() ? std::cout : file;
    if (o.which == 3) print_baseline_table(out, tables::table3(), o.format);
    else print_expansion_table(out, o.which == 1 ? tables::table1(o.eps) : tables::table2(o.delta), o.format);
    if (!out) throw std::runtime_error("write failed for " + o.out);
    if (!o.check) return kExitOk;
    return report_check(o.which);
}

struct RegionOptions {
    int resolution = 512;
    std::string out;
};

int cmd_regions(const RegionOptions& o)
{
    const auto cells = aux::region_grid(o.resolution);
    const auto counts = aux::count_regions(cells);
    std::ostream* summary = &std::cout;
    if (o.out.empty()) {
        aux::write_region_csv(std::cout, cells);
        summary = &std::cerr;
    } else {
        std::ofstream file(o.out);
        if (!file) throw std::runtime_error("cannot open " + o.out);
        aux::write_region_csv(file, cells);
        if (!file) throw std::runtime_error("write failed for " + o.out);
    }
    *summary << fmt::format("cond1_only={} cond2_only={} both={} neither={}\n", counts.cond1_only,
                            counts.cond2_only, counts.both, counts.neither);
    return counts.neither == 0 ? kExitOk : kExitCheck;
}

struct BenchOptions {
    int grid = 100;
    std::vector<int> orders{1, 2, 3};
};

int cmd_bench(const BenchOptions& o)
{
    using Clock = std::chrono::steady_clock;
    std::vector<EvalPoint> points;
    std::vector<double> exact;
    for (int i = 1; i <= o.grid; ++i)
        for (int j = 1; j <= o.grid; ++j) {
            points.emplace_back(static_cast<double>(i) / (o.grid + 1), static_cast<double>(j) / (o.grid + 1));
            exact.push_back(special::oracle_E(points.back()));
        }

    long violations = 0;
    for (const int order : o.orders) {
        const ExpansionOrder n(order);
        for (const bool use_first : {true, false}) {
            double max_width = 0;
            long local = 0;
            const auto start = Clock::now();
            for (std::size_t i = 0; i < points.size(); ++i) {
                const auto e = use_first ? first::enclose_first(points[i], n) : second::enclose_second(points[i], n);
                max_width = std::max(max_width, e.width());
                if (!e.contains(exact[i])) ++local;
            }
            const double ns =
                std::chrono::duration<double, std::nano>(Clock::now() - start).count() / static_cast<double>(points.size());
            std::cout << fmt::format("{:<6} N={} evals={} ns/eval={:.0f} max_width={} violations={}\n",
                                     use_first ? "first" : "second", order, points.size(), ns, num(max_width), local);
            violations += local;
        }
    }
    return violations == 0 ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified evaluation of the incomplete elliptic integral of the second kind E(lambda, k)"};
    app.require_subcommand(1);

    EvalOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate E(lambda, k) with certified bounds");
    eval->add_option("--lambda", eval_opts.lambda, "Amplitude parameter in [0, 1]")->required();
    eval->add_option("--k", eval_opts.k, "Modulus in [0, 1]")->required();
    eval->add_option("--order", eval_opts.order, "Truncation order N >= 1")->check(CLI::PositiveNumber);
    eval->add_option("--method", eval_opts.method, "Evaluation method")
        ->check(CLI::IsMember({"auto", "first", "second", "aux-bf", "aux-carlson", "baseline"}));
    eval->add_option("--eps", eval_opts.eps, "Order shift for the refined first approximant");
    eval->add_option("--delta", eval_opts.delta, "Weight for the refined second approximant");
    eval->add_flag("--oracle", eval_opts.oracle, "Also print the quadrature reference value");
    eval->add_flag("--check", eval_opts.check, "Exit 3 unless the quadrature value lies in the enclosure");
    eval->add_option("--format", eval_opts.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

    TableOptions table_opts;
    auto* table = app.add_subcommand("table", "Reproduce a numerical table");
    table->add_option("which", table_opts.which, "Table number")->required()->check(CLI::Range(1, 3));
    table->add_option("--format", table_opts.format, "Output format")->check(CLI::IsMember({"csv", "md", "json"}));
    table->add_option("--out", table_opts.out, "Output path (default stdout)");
    table->add_flag("--check", table_opts.check, "Compare against the published values");
    table->add_option("--eps", table_opts.eps, "Order shift for the refined first approximant");
    table->add_option("--delta", table_opts.delta, "Weight for the refined second approximant");

    RegionOptions region_opts;
    auto* regions = app.add_subcommand("regions", "Classify an interior lattice by convergence condition");
    regions->add_option("--resolution", region_opts.resolution, "Lattice resolution >= 2")->check(CLI::Range(2, 1 << 14));
    regions->add_option("--out", region_opts.out, "CSV output path (default stdout)");

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "Time both expansions and check every enclosure");
    bench->add_option("--grid", bench_opts.grid, "Points per axis")->check(CLI::Range(1, 2000));
    bench->add_option("--orders", bench_opts.orders, "Orders to run")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_opts);
        if (*table) return cmd_table(table_opts);
        if (*regions) return cmd_regions(region_opts);
        if (*bench) return cmd_bench(bench_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}
