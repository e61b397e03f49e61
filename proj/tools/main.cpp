// sievelab: wheel double-sieve laboratory for twin primes, prime gaps,
// two-prime sums, density/sumset checks and the matching predictors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sievelab/analytic.hpp"
#include "sievelab/claims.hpp"
#include "sievelab/counting.hpp"
#include "sievelab/density.hpp"
#include "sievelab/json_writer.hpp"
#include "sievelab/sieve.hpp"

namespace {

using namespace sievelab;

std::string fmt(double v) { return JsonWriter::format_double(v); }

BuildOptions build_opts() { return {.threads = threads_from_env()}; }

PrimeFlags flags_for_values(uint64_t n) {
    return build_flags(n / 6 + 2, build_opts());
}

// ---- count ----

struct CountArgs {
    uint64_t g = 0, n = 0, m = 0, shift = 0;
    bool json = false;
};

int run_count_gap(const CountArgs& args) {
    const PrimeFlags flags = build_flags((args.n + 1) / 6 + (args.g + 2) / 6 + 2, build_opts());
    const GapCount res = count_gap_pairs(flags, args.g, args.n);
    if (args.json) {
        JsonWriter w;
        w.begin_object();
        w.key("construction").value(to_string(res.construction_used));
        w.key("count").value(res.count);
        w.key("g").value(res.g);
        w.key("n").value(res.n);
        w.key("op").value("gap");
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        std::cout << res.count << "\n";
    }
    return 0;
}

int run_count_goldbach(const CountArgs& args) {
    const PrimeFlags flags = build_flags((args.g + 2) / 6 + 2, build_opts());
    const GoldbachCount res = count_goldbach(flags, args.g);
    if (args.json) {
        JsonWriter w;
        w.begin_object();
        w.key("count").value(res.count);
        w.key("g").value(res.g);
        w.key("op").value("goldbach");
        w.key("raw_half").value(res.raw_half);
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        std::cout << res.count << "\n";
    }
    return 0;
}

int run_count_quad(CountArgs& args) {
    if (args.m == 0 && args.n == 0) throw CLI::ValidationError("count quad", "need --m or --n");
    if (args.m == 0) args.m = args.n / 6;
    const PrimeFlags flags = build_flags(args.m + args.shift + 1, build_opts());
    const TwinFlags twin = twin_flags(flags);
    const TwinPatternCount res = count_twin_patterns(twin, args.shift, args.m);
    if (args.json) {
        JsonWriter w;
        w.begin_object();
        w.key("count").value(res.count);
        w.key("m").value(res.m);
        w.key("op").value("quad");
        w.key("shift").value(res.shift);
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        std::cout << res.count << "\n";
    }
    return 0;
}

int run_count_twin_goldbach(const CountArgs& args) {
    const PrimeFlags flags = build_flags(args.m + 1, build_opts());
    const TwinFlags twin = twin_flags(flags);
    const uint64_t count = count_twin_goldbach(twin, args.m);
    if (args.json) {
        JsonWriter w;
        w.begin_object();
        w.key("count").value(count);
        w.key("m").value(args.m);
        w.key("op").value("twin_goldbach");
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        std::cout << count << "\n";
    }
    return 0;
}

// ---- predict ----

struct PredictRow {
    uint64_t n;
    double actual;
    Predictor predictor;
};

void emit_predictions(const std::vector<PredictRow>& rows, bool json, bool csv) {
    if (csv) {
        std::cout << "n,actual,predicted,error\n";
        for (const auto& row : rows) {
            std::cout << row.n << "," << fmt(row.actual) << "," << fmt(row.predictor.predicted)
                      << "," << fmt(row.actual - row.predictor.predicted) << "\n";
        }
        return;
    }
    if (json) {
        JsonWriter w;
        w.begin_array();
        for (const auto& row : rows) {
            w.begin_object();
            w.key("actual").value(row.actual);
            w.key("inputs").begin_object();
            for (const auto& [k, v] : row.predictor.inputs) w.key(k).value(v);
            w.end_object();
            w.key("n").value(row.predictor.n);
            w.key("predicted").value(row.predictor.predicted);
            w.key("target").value(to_string(row.predictor.target));
            w.end_object();
        }
        w.end_array();
        std::cout << w.str() << "\n";
        return;
    }
    for (const auto& row : rows) {
        std::cout << "n=" << row.n << " actual=" << fmt(row.actual)
                  << " predicted=" << fmt(row.predictor.predicted)
                  << " error=" << fmt(row.actual - row.predictor.predicted) << "\n";
    }
}

// ---- density ----

int run_density(const std::string& set_name, uint64_t limit, bool list_missing, bool json) {
    const PrimeFlags flags = build_flags(std::max<uint64_t>(limit, 2), build_opts());

    auto single = [&](SetSource src) {
        const IndexSet s = make_index_set(src, limit, flags);
        const DensityEstimate d = density(s);
        if (json) {
            JsonWriter w;
            w.begin_object();
            w.key("limit").value(limit);
            w.key("natural").value(d.natural);
            w.key("op").value("density");
            w.key("schnirelmann").value(d.schnirelmann);
            w.key("set").value(set_name);
            w.end_object();
            std::cout << w.str() << "\n";
        } else {
            std::cout << "schnirelmann=" << fmt(d.schnirelmann) << " natural=" << fmt(d.natural)
                      << "\n";
        }
        return 0;
    };

    auto coverage = [&](const CoverageReport& report) {
        if (json) {
            JsonWriter w;
            w.begin_object();
            w.key("limit").value(report.limit);
            if (list_missing) {
                w.key("missing").begin_array();
                for (uint64_t v : report.missing) w.value(v);
                w.end_array();
            }
            w.key("missing_count").value(static_cast<uint64_t>(report.missing.size()));
            w.key("natural").value(report.natural_estimate);
            w.key("op").value("density");
            w.key("schnirelmann").value(report.schnirelmann_prefix);
            w.key("set").value(set_name);
            w.end_object();
            std::cout << w.str() << "\n";
        } else {
            std::cout << "limit=" << report.limit << " missing=" << report.missing.size()
                      << " schnirelmann=" << fmt(report.schnirelmann_prefix)
                      << " natural=" << fmt(report.natural_estimate) << "\n";
            if (list_missing)
                for (uint64_t v : report.missing) std::cout << v << "\n";
        }
        return 0;
    };

    if (set_name == "L") return single(SetSource::L);
    if (set_name == "R") return single(SetSource::R);
    if (set_name == "T") return single(SetSource::T);
    if (set_name == "LL" || set_name == "LR" || set_name == "RR" || set_name == "TT") {
        const SetSource s1 = set_name[0] == 'L'   ? SetSource::L
                             : set_name[0] == 'R' ? SetSource::R
                                                  : SetSource::T;
        const SetSource s2 = set_name[1] == 'L'   ? SetSource::L
                             : set_name[1] == 'R' ? SetSource::R
                                                  : SetSource::T;
        const IndexSet a = make_index_set(s1, limit, flags);
        const IndexSet b = make_index_set(s2, limit, flags);
        return coverage(sumset_coverage(a, b, limit));
    }
    if (set_name == "P1") return coverage(basis_order3_check(SetSource::PrimesWith1, limit, flags));
    if (set_name == "TW3") return coverage(basis_order3_check(SetSource::TwinPrimes, limit, flags));
    throw CLI::ValidationError("density", "unknown --set " + set_name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wheel double-sieve laboratory: prime pair counts, two-prime sums,\n"
                 "analytic predictors, densities and a claim-verification harness"};
    app.require_subcommand(1);

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "build the prime bitmaps and show counts");
    uint64_t sieve_limit = 1'000'000;
    std::string sieve_out;
    uint64_t sieve_block = 0;
    sieve_cmd->add_option("--limit", sieve_limit, "cover wheel terms up to this value");
    sieve_cmd->add_option("--out", sieve_out, "write the bitmaps to this file");
    sieve_cmd->add_option("--block-indices", sieve_block, "sieve segment size in indices");

    // count
    auto* count_cmd = app.add_subcommand("count", "window-construction counting functions");
    count_cmd->require_subcommand(1);
    CountArgs cg, cgb, cq, ctg;
    auto* count_gap = count_cmd->add_subcommand("gap", "prime pairs (p, p+g), 5 <= p <= n");
    count_gap->add_option("--g", cg.g, "even gap >= 2")->required();
    count_gap->add_option("--n", cg.n, "upper bound for the smaller prime")->required();
    count_gap->add_flag("--json", cg.json, "emit a JSON record");
    auto* count_goldbach_cmd =
        count_cmd->add_subcommand("goldbach", "two-prime sums of an even g >= 10");
    count_goldbach_cmd->add_option("--g", cgb.g, "even number >= 10")->required();
    count_goldbach_cmd->add_flag("--json", cgb.json, "emit a JSON record");
    auto* count_quad =
        count_cmd->add_subcommand("quad", "twin pairs whose shifted translate is a twin pair");
    count_quad->add_option("--shift", cq.shift, "translate in index units (1 = quadruplets)");
    count_quad->add_option("--m", cq.m, "index window bound");
    count_quad->add_option("--n", cq.n, "value window bound (used as m = n/6)");
    count_quad->add_flag("--json", cq.json, "emit a JSON record");
    auto* count_tg = count_cmd->add_subcommand(
        "twin-goldbach", "index pairs i + j = m with both twin bits set");
    count_tg->add_option("--m", ctg.m, "triple parameter m")->required();
    count_tg->add_flag("--json", ctg.json, "emit a JSON record");

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "analytic predictors vs sieved counts");
    predict_cmd->require_subcommand(1);
    std::vector<uint64_t> pt_n, pq_n;
    uint64_t pgap_g = 0, pgap_n = 0, pgold_g = 0, ptg_m = 0;
    std::string pgap_source = "actual", pq_from = "primes";
    bool pt_json = false, pt_csv = false, pgap_json = false, pgap_csv = false;
    bool pgold_json = false, pgold_csv = false, pq_json = false, pq_csv = false;
    bool ptg_json = false, ptg_csv = false;
    auto* predict_twin_cmd = predict_cmd->add_subcommand("twin", "twin-count predictor");
    predict_twin_cmd->add_option("--n", pt_n, "evaluation bound(s)")->required();
    predict_twin_cmd->add_flag("--json", pt_json, "emit JSON records");
    predict_twin_cmd->add_flag("--csv", pt_csv, "emit n,actual,predicted,error rows");
    auto* predict_gap_cmd = predict_cmd->add_subcommand("gap", "gap-count predictor");
    predict_gap_cmd->add_option("--g", pgap_g, "even gap")->required();
    predict_gap_cmd->add_option("--n", pgap_n, "evaluation bound")->required();
    predict_gap_cmd->add_option("--source", pgap_source, "twin base: actual|predicted")
        ->check(CLI::IsMember({"actual", "predicted"}));
    predict_gap_cmd->add_flag("--json", pgap_json, "emit JSON records");
    predict_gap_cmd->add_flag("--csv", pgap_csv, "emit n,actual,predicted,error rows");
    auto* predict_gold_cmd =
        predict_cmd->add_subcommand("goldbach", "two-prime-sum predictor");
    predict_gold_cmd->add_option("--g", pgold_g, "even number >= 10")->required();
    predict_gold_cmd->add_flag("--json", pgold_json, "emit JSON records");
    predict_gold_cmd->add_flag("--csv", pgold_csv, "emit n,actual,predicted,error rows");
    auto* predict_quad_cmd = predict_cmd->add_subcommand("quad", "quadruplet predictor");
    predict_quad_cmd->add_option("--n", pq_n, "evaluation bound(s)")->required();
    predict_quad_cmd->add_option("--from", pq_from, "inputs: primes|twins")
        ->check(CLI::IsMember({"primes", "twins"}));
    predict_quad_cmd->add_flag("--json", pq_json, "emit JSON records");
    predict_quad_cmd->add_flag("--csv", pq_csv, "emit n,actual,predicted,error rows");
    auto* predict_tg_cmd =
        predict_cmd->add_subcommand("twin-goldbach", "twin-pair-sum predictor");
    predict_tg_cmd->add_option("--m", ptg_m, "triple parameter m")->required();
    predict_tg_cmd->add_flag("--json", ptg_json, "emit JSON records");
    predict_tg_cmd->add_flag("--csv", ptg_csv, "emit n,actual,predicted,error rows");

    // density
    auto* density_cmd = app.add_subcommand("density", "densities, sumsets and basis checks");
    std::string density_set;
    uint64_t density_limit = 10'000;
    bool density_missing = false, density_json = false;
    density_cmd->add_option("--set", density_set, "L R T LL LR RR TT P1 TW3")->required();
    density_cmd->add_option("--limit", density_limit, "check integers up to this limit");
    density_cmd->add_flag("--list-missing", density_missing, "print the missing integers");
    density_cmd->add_flag("--json", density_json, "emit a JSON record");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the claim-verification harness");
    uint64_t verify_limit = 10'000'000;
    std::string verify_claims;
    bool verify_json = false, verify_csv = false;
    verify_cmd->add_option("--limit", verify_limit,
                           "skip claims whose bound exceeds this value");
    verify_cmd->add_option("--claims", verify_claims, "comma-separated claim ids");
    verify_cmd->add_flag("--json", verify_json, "emit the reports as JSON");
    verify_cmd->add_flag("--csv", verify_csv, "emit the reports as CSV");

    // exceptions
    auto* exc_cmd =
        app.add_subcommand("exceptions", "triples without a twin-pair representation");
    uint64_t exc_limit = 30'000;
    bool exc_json = false;
    exc_cmd->add_option("--limit", exc_limit, "check triples with m up to this limit")
        ->required();
    exc_cmd->add_flag("--json", exc_json, "emit a JSON record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (sieve_cmd->parsed()) {
            BuildOptions opts = build_opts();
            if (sieve_block != 0) opts.block_indices = sieve_block;
            const uint64_t m_max = sieve_limit / 6 + 2;
            const PrimeFlags flags = build_flags(m_max, opts);
            const TwinFlags twin = twin_flags(flags);
            std::cout << "m_max=" << flags.m_max() << " pi_a=" << flags.a().count()
                      << " pi_b=" << flags.b().count() << " twins=" << twin.t().count() << "\n";
            if (!sieve_out.empty()) {
                std::ofstream out(sieve_out, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open " + sieve_out);
                save_flags(flags, out);
            }
            return 0;
        }
        if (count_gap->parsed()) return run_count_gap(cg);
        if (count_goldbach_cmd->parsed()) return run_count_goldbach(cgb);
        if (count_quad->parsed()) return run_count_quad(cq);
        if (count_tg->parsed()) return run_count_twin_goldbach(ctg);

        if (predict_twin_cmd->parsed()) {
            std::vector<PredictRow> rows;
            for (uint64_t n : pt_n) {
                const PrimeFlags flags = flags_for_values(n);
                rows.push_back({n, double(count_gap_pairs(flags, 2, n).count),
                                predict_twin(flags, n)});
            }
            emit_predictions(rows, pt_json, pt_csv);
            return 0;
        }
        if (predict_gap_cmd->parsed()) {
            const PrimeFlags flags =
                build_flags((pgap_n + 1) / 6 + (pgap_g + 2) / 6 + 2, build_opts());
            const GapSource src = pgap_source == "actual" ? GapSource::actual_twin
                                                          : GapSource::predicted_twin;
            std::vector<PredictRow> rows{{pgap_n,
                                          double(count_gap_pairs(flags, pgap_g, pgap_n).count),
                                          predict_gap(flags, pgap_g, pgap_n, src)}};
            emit_predictions(rows, pgap_json, pgap_csv);
            return 0;
        }
        if (predict_gold_cmd->parsed()) {
            const PrimeFlags flags = flags_for_values(pgold_g);
            std::vector<PredictRow> rows{{pgold_g, double(count_goldbach(flags, pgold_g).count),
                                          predict_goldbach(flags, pgold_g)}};
            emit_predictions(rows, pgold_json, pgold_csv);
            return 0;
        }
        if (predict_quad_cmd->parsed()) {
            std::vector<PredictRow> rows;
            for (uint64_t n : pq_n) {
                const PrimeFlags flags = build_flags(n / 6 + 2, build_opts());
                const TwinFlags twin = twin_flags(flags);
                const double actual = double(count_twin_patterns(twin, 1, n / 6).count);
                rows.push_back({n, actual,
                                pq_from == "primes" ? predict_quad_from_primes(flags, n)
                                                    : predict_quad_from_twins(flags, n)});
            }
            emit_predictions(rows, pq_json, pq_csv);
            return 0;
        }
        if (predict_tg_cmd->parsed()) {
            const PrimeFlags flags = build_flags(ptg_m + 2, build_opts());
            const TwinFlags twin = twin_flags(flags);
            std::vector<PredictRow> rows{{6 * ptg_m, double(count_twin_goldbach(twin, ptg_m)),
                                          predict_twin_goldbach(flags, ptg_m)}};
            emit_predictions(rows, ptg_json, ptg_csv);
            return 0;
        }

        if (density_cmd->parsed())
            return run_density(density_set, density_limit, density_missing, density_json);

        if (verify_cmd->parsed()) {
            CheckOptions opts;
            opts.limit_n = verify_limit;
            opts.threads = threads_from_env();
            if (!verify_claims.empty()) {
                std::string id;
                for (char c : verify_claims + ",") {
                    if (c == ',') {
                        if (!id.empty()) opts.selection.push_back(id);
                        id.clear();
                    } else {
                        id += c;
                    }
                }
            }
            const auto reports = run_claim_checks(opts);
            if (verify_json) {
                std::cout << claims_to_json(reports) << "\n";
            } else if (verify_csv) {
                std::cout << claims_to_csv(reports);
            } else {
                for (const auto& r : reports) {
                    const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
                    std::cout << status << " " << r.claim_id << " computed=" << fmt(r.computed)
                              << " expected=" << fmt(r.expected)
                              << " tolerance=" << fmt(r.tolerance) << " ("
                              << to_string(r.comparison) << ")"
                              << (r.note.empty() ? "" : " [" + r.note + "]") << "\n";
                }
                std::cout << "failures=" << count_failures(reports) << "\n";
            }
            return count_failures(reports) == 0 ? 0 : 1;
        }

        if (exc_cmd->parsed()) {
            const uint64_t m_max = 2 * exc_limit + 1;
            const PrimeFlags flags = build_flags(m_max, build_opts());
            const TwinFlags twin = twin_flags(flags);
            const auto exceptions = find_twin_goldbach_exceptions(twin, exc_limit);
            if (exc_json) {
                JsonWriter w;
                w.begin_object();
                w.key("certified_m_max").value(m_max);
                w.key("exceptions").begin_array();
                for (uint64_t m : exceptions) w.value(m);
                w.end_array();
                w.key("limit").value(exc_limit);
                w.end_object();
                std::cout << w.str() << "\n";
            } else {
                for (uint64_t m : exceptions) std::cout << m << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
