#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace ssz::tools;

std::vector<CurveRecord> load_records(const std::string& curves_path) {
    if (curves_path.empty()) return {builtin_curve()};
    return parse_curves(curves_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Supersingular zero loci of prime-conductor eigenforms: divisor polynomials, "
        "Brandt matrices, quaternionic eigenforms and the associated theorem battery.\n"
        "Ranks in curve files are trusted input; this tool never verifies them."};
    app.require_subcommand(1);

    std::uint64_t p = 0;
    std::string curves_path;
    std::string out_path;
    std::string ell_arg = "2,3";
    std::vector<std::uint64_t> extra_m;
    int jobs = 0;

    auto add_curves_opt = [&](CLI::App* sub) {
        sub->add_option("--curves", curves_path,
                        "curve CSV (label,p,a1,a2,a3,a4,a6,rank); defaults to the built-in "
                        "conductor-83 record");
    };
    auto add_jobs_opt = [&](CLI::App* sub) {
        sub->add_option("--jobs", jobs, "worker threads (0 = bounded default)");
    };

    CLI::App* ss = app.add_subcommand("ss", "supersingular locus of a prime p");
    ss->add_option("p", p, "prime >= 11")->required();

    CLI::App* brandt = app.add_subcommand("brandt", "Brandt matrices and invariant report");
    brandt->add_option("p", p, "prime >= 11")->required();
    brandt->add_option("--ell", ell_arg, "comma-separated subset of 2,3 (default 2,3)");
    brandt->add_option("--m", extra_m, "extra Hecke indices with prime factors in {2,3,p}");

    CLI::App* eigen = app.add_subcommand("eigenform", "quaternionic eigenform per curve");
    add_curves_opt(eigen);
    add_jobs_opt(eigen);

    CLI::App* divisor = app.add_subcommand("divisor", "divisor polynomial and zero sets");
    add_curves_opt(divisor);
    add_jobs_opt(divisor);

    CLI::App* check = app.add_subcommand("check", "full theorem battery (JSON verdicts)");
    add_curves_opt(check);
    add_jobs_opt(check);

    CLI::App* survey = app.add_subcommand("survey", "survey CSV, one row per curve");
    add_curves_opt(survey);
    add_jobs_opt(survey);
    survey->add_option("--out", out_path, "output CSV path ('-' for stdout)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        CacheManager cache;
        if (ss->parsed()) return cmd_ss(p, cache, std::cout);
        if (brandt->parsed()) {
            std::vector<int> ells;
            std::stringstream is(ell_arg);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                if (tok == "2") ells.push_back(2);
                else if (tok == "3") ells.push_back(3);
                else {
                    std::cerr << "ssz: --ell accepts only 2 and 3\n";
                    return kExitUsage;
                }
            }
            return cmd_brandt(p, ells, extra_m, cache, std::cout);
        }
        auto records = load_records(curves_path);
        if (eigen->parsed()) return cmd_eigenform(records, cache, std::cout, jobs);
        if (divisor->parsed()) return cmd_divisor(records, cache, std::cout, jobs);
        if (check->parsed()) return cmd_check(records, cache, std::cout, jobs);
        if (survey->parsed()) {
            if (out_path == "-") return cmd_survey(records, cache, std::cout, jobs);
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "ssz: cannot open " << out_path << " for writing\n";
                return kExitInternal;
            }
            return cmd_survey(records, cache, out, jobs);
        }
        return kExitUsage;
    } catch (const ssz::internal_consistency_error& e) {
        std::cerr << "ssz: proved-theorem invariant violated: " << e.what() << "\n";
        return kExitTheoremFailed;
    } catch (const std::exception& e) {
        std::cerr << "ssz: " << e.what() << "\n";
        return kExitInternal;
    }
}
