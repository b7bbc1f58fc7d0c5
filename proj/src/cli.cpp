#include "turnwalk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turnwalk/enumeration.hpp"
#include "turnwalk/lattice.hpp"
#include "turnwalk/operators.hpp"
#include "turnwalk/rmt.hpp"
#include "turnwalk/series.hpp"

namespace turnwalk::cli {

namespace {

using nlohmann::ordered_json;

// Budget bounds.  Everything outside them exits 2 before any computation;
// the bounds keep every command interactive on one core.
constexpr int kMaxDim = 6;
constexpr std::int64_t kMaxSteps = 128;
constexpr std::int64_t kMaxSeparation = 64;
constexpr std::int64_t kMaxOrder = 40;
constexpr std::int64_t kMaxWordLength = 64;
constexpr std::int64_t kMaxEntry = 1000;
constexpr std::int64_t kMinSamples = 100;
constexpr std::int64_t kMaxSamples = 10'000'000;
constexpr int kMaxWorkers = 64;
constexpr std::int64_t kMaxKernelQ = 4096;
constexpr std::int64_t kMaxAsympQ = 2000;

void require(bool ok, const std::string& message) {
    if (!ok) throw CLI::ValidationError(message);
}

std::string double_str(double x) { return ordered_json(x).dump(); }

ordered_json rational_json(const mpq_class& value) {
    return ordered_json{{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

ordered_json int_vector_json(const std::vector<std::int64_t>& values) {
    return ordered_json(values);
}

ordered_json estimate_json(const MomentEstimate& est) {
    ordered_json j;
    if (est.complex_mean)
        j["mean"] = ordered_json::array({est.mean.real(), est.mean.imag()});
    else
        j["mean"] = est.mean.real();
    j["stderr"] = est.standard_error;
    j["samples"] = est.samples;
    j["seed"] = est.seed;
    j["stream_count"] = est.strand_count;
    return j;
}

ordered_json series_json(const RationalSeries& s) {
    ordered_json coeffs = ordered_json::array();
    for (std::int64_t k = 0; k <= s.order(); ++k) coeffs.push_back(rational_json(s.coeff(k)));
    return ordered_json{{"order", s.order()}, {"coefficients", coeffs}};
}

std::string series_csv(const RationalSeries& s) {
    std::ostringstream csv;
    csv << "index,numerator,denominator\n";
    for (std::int64_t k = 0; k <= s.order(); ++k)
        csv << k << ',' << s.coeff(k).get_num().get_str() << ','
            << s.coeff(k).get_den().get_str() << '\n';
    return csv.str();
}

ordered_json match_report_json(const SeriesMatchReport& report) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows)
        rows.push_back(ordered_json{{"index", row.index},
                                    {"lhs", row.lhs},
                                    {"rhs", row.rhs},
                                    {"equal", row.equal}});
    return ordered_json{{"name", report.name}, {"pass", report.pass}, {"rows", rows}};
}

std::string match_report_csv(const SeriesMatchReport& report) {
    std::ostringstream csv;
    csv << "index,lhs,rhs,equal\n";
    for (const auto& row : report.rows)
        csv << row.index << ',' << row.lhs << ',' << row.rhs << ','
            << (row.equal ? "true" : "false") << '\n';
    return csv.str();
}

/// Emits one report and maps its verdict to the exit code.  CSV is offered
/// only where a table shape exists (coefficient tables and sweeps); asking
/// for it elsewhere is a usage error.
struct Sink {
    std::string format;
    std::string out_path;
    std::ostream& out;
    std::ostream& err;
    int exit_code = 0;

    void emit(const std::string& command, const ordered_json& config, const ordered_json& result,
              std::optional<bool> verdict, const std::string& csv_table = {}) {
        std::string payload;
        if (format == "csv") {
            if (csv_table.empty())
                throw CLI::ValidationError("csv output is not available for '" + command + "'");
            payload = csv_table;
        } else {
            ordered_json doc;
            doc["command"] = command;
            doc["config"] = config;
            doc["result"] = result;
            if (verdict) doc["verdict"] = *verdict ? "pass" : "fail";
            payload = doc.dump(2) + "\n";
        }
        if (out_path.empty()) {
            out << payload;
        } else {
            std::ofstream file(out_path);
            if (!file) throw CLI::ValidationError("cannot open output file " + out_path);
            file << payload;
        }
        exit_code = verdict && !*verdict ? 1 : 0;
    }
};

ordered_json base_config(const Sink& sink) {
    return ordered_json{{"format", sink.format},
                        {"out", sink.out_path.empty() ? "-" : sink.out_path}};
}

Configuration config_from(const std::vector<std::int64_t>& parts) {
    for (std::int64_t p : parts)
        require(std::llabs(p) <= kMaxEntry, "configuration entries exceed the budget");
    return Configuration(parts);
}

YoungDiagram diagram_from(const std::vector<std::int64_t>& rows) {
    for (std::int64_t r : rows) require(r >= 0 && r <= kMaxEntry, "diagram rows exceed the budget");
    return YoungDiagram(rows);
}

void check_mc_budget(std::int64_t samples, int workers) {
    require(samples >= kMinSamples && samples <= kMaxSamples,
            "samples must lie in [100, 10000000]");
    require(workers >= 1 && workers <= kMaxWorkers, "workers must lie in [1, 64]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"vicious-walker identities: exact counts, series determinants, and"
                 " truncated-unitary Monte Carlo"};
    app.require_subcommand(1);

    Sink sink{"json", "", out, err};
    app.add_option("--format", sink.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", sink.out_path, "write the report to a file instead of stdout");
    app.fallthrough();

    // ---- exact -----------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "exact lattice counts");
    exact->require_subcommand(1);
    exact->fallthrough();

    {
        auto* cmd = exact->add_subcommand("z", "ground-state walk count");
        auto d = std::make_shared<int>(1);
        auto steps = std::make_shared<std::int64_t>(0);
        auto q = std::make_shared<std::int64_t>(0);
        cmd->add_option("--d", *d, "number of walkers")->required()->check(CLI::Range(1, kMaxDim));
        cmd->add_option("--N", *steps, "number of steps")
            ->required()
            ->check(CLI::Range(std::int64_t{0}, kMaxSteps));
        cmd->add_option("--q", *q, "ground-state separation")
            ->check(CLI::Range(std::int64_t{0}, kMaxSeparation))
            ->capture_default_str();
        cmd->callback([&sink, d, steps, q] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["N"] = *steps;
            config["q"] = *q;
            const mpz_class value = z_ground(*d, *steps, *q);
            sink.emit("exact z", config, ordered_json{{"value", value.get_str()}}, std::nullopt);
        });
    }

    {
        auto* cmd = exact->add_subcommand("refined", "walk count with a prescribed step word");
        auto word_text = std::make_shared<std::string>();
        auto from = std::make_shared<std::vector<std::int64_t>>();
        auto to = std::make_shared<std::vector<std::int64_t>>();
        cmd->add_option("--word", *word_text, "word over {L,R}; rightmost letter acts first")
            ->required();
        cmd->add_option("--from", *from, "start configuration, comma separated")
            ->required()
            ->delimiter(',');
        cmd->add_option("--to", *to, "end configuration, comma separated")
            ->required()
            ->delimiter(',');
        cmd->callback([&sink, word_text, from, to] {
            require(static_cast<std::int64_t>(word_text->size()) <= kMaxWordLength,
                    "word exceeds the budget");
            require(from->size() == to->size(), "--from and --to must have equal dimension");
            require(!from->empty() && static_cast<int>(from->size()) <= kMaxDim,
                    "dimension must lie in [1, 6]");
            const StepWord word = StepWord::parse(*word_text);
            const Configuration a = config_from(*from);
            const Configuration b = config_from(*to);
            ordered_json config = base_config(sink);
            config["word"] = word.str();
            config["from"] = int_vector_json(a.parts());
            config["to"] = int_vector_json(b.parts());
            const WeylGraph graph{a.dim()};
            const mpz_class value = refined_count(graph, word, a, b);
            sink.emit("exact refined", config, ordered_json{{"value", value.get_str()}},
                      std::nullopt);
        });
    }

    {
        auto* cmd = exact->add_subcommand("udn", "permutations with bounded increasing runs");
        auto d = std::make_shared<int>(1);
        auto n = std::make_shared<int>(0);
        cmd->add_option("--d", *d, "bound on the increasing subsequence length")
            ->required()
            ->check(CLI::Range(1, 16));
        cmd->add_option("--n", *n, "permutation size")->required()->check(CLI::Range(0, kUCountMaxN));
        cmd->callback([&sink, d, n] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["n"] = *n;
            const mpz_class value = u_count(*d, *n);
            sink.emit("exact udn", config, ordered_json{{"value", value.get_str()}}, std::nullopt);
        });
    }

    {
        auto* cmd = exact->add_subcommand("syt", "standard tableaux of a shape");
        auto shape = std::make_shared<std::vector<std::int64_t>>();
        cmd->add_option("--shape", *shape, "diagram rows, comma separated")
            ->required()
            ->delimiter(',');
        cmd->callback([&sink, shape] {
            require(shape->size() <= 16, "shape exceeds the budget");
            const YoungDiagram y = diagram_from(*shape);
            require(cell_count(y) <= 64, "shape exceeds the budget");
            ordered_json config = base_config(sink);
            config["shape"] = int_vector_json(y.rows());
            const mpz_class value = syt_count(y);
            sink.emit("exact syt", config, ordered_json{{"value", value.get_str()}}, std::nullopt);
        });
    }

    // ---- series ----------------------------------------------------------
    auto* series = app.add_subcommand("series", "exact generating-series tables");
    series->require_subcommand(1);
    series->fallthrough();

    auto add_series_cmd = [&](const std::string& name, const std::string& desc, bool walk_side) {
        auto* cmd = series->add_subcommand(name, desc);
        auto d = std::make_shared<int>(1);
        auto q = std::make_shared<std::int64_t>(0);
        auto order = std::make_shared<std::int64_t>(10);
        cmd->add_option("--d", *d, "number of walkers")->required()->check(CLI::Range(1, kMaxDim));
        cmd->add_option("--q", *q, "ground-state separation")
            ->check(CLI::Range(std::int64_t{0}, kMaxSeparation))
            ->capture_default_str();
        cmd->add_option("--order", *order, "truncation order")
            ->check(CLI::Range(std::int64_t{0}, kMaxOrder))
            ->capture_default_str();
        cmd->callback([&sink, d, q, order, name, walk_side] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["q"] = *q;
            config["order"] = *order;
            RationalSeries s(0);
            if (walk_side) {
                s = gd_from_counts(*d, *q, *order);
            } else {
                std::vector<std::vector<std::int64_t>> offsets(
                    static_cast<std::size_t>(*d), std::vector<std::int64_t>(static_cast<std::size_t>(*d)));
                for (int i = 0; i < *d; ++i)
                    for (int j = 0; j < *d; ++j)
                        offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            *q + j - i;
                s = toeplitz_bessel_det(offsets, *order);
            }
            sink.emit("series " + name, config, series_json(s), std::nullopt, series_csv(s));
        });
    };
    add_series_cmd("gd", "walk-count exponential generating series", true);
    add_series_cmd("det", "Toeplitz determinant of Bessel series", false);

    // ---- check -----------------------------------------------------------
    auto* check = app.add_subcommand("check", "exact identity checks");
    check->require_subcommand(1);
    check->fallthrough();

    {
        auto* cmd = check->add_subcommand("toeplitz", "walk series against the determinant");
        auto d = std::make_shared<int>(1);
        auto q = std::make_shared<std::int64_t>(0);
        auto order = std::make_shared<std::int64_t>(10);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, kMaxDim));
        cmd->add_option("--q", *q)->check(CLI::Range(std::int64_t{0}, kMaxSeparation))
            ->capture_default_str();
        cmd->add_option("--order", *order)->check(CLI::Range(std::int64_t{0}, kMaxOrder))
            ->capture_default_str();
        cmd->callback([&sink, d, q, order] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["q"] = *q;
            config["order"] = *order;
            const SeriesMatchReport report = toeplitz_match_report(*d, *q, *order);
            sink.emit("check toeplitz", config, match_report_json(report), report.pass,
                      match_report_csv(report));
        });
    }

    {
        auto* cmd = check->add_subcommand("forrester", "even/odd ground-state count identity");
        auto d = std::make_shared<int>(1);
        auto n = std::make_shared<int>(0);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, kMaxDim));
        cmd->add_option("--n", *n)->required()->check(CLI::Range(0, kUCountMaxN));
        cmd->callback([&sink, d, n] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["n"] = *n;
            const ForresterReport report = forrester_check(*d, *n);
            ordered_json result{{"walk_side", report.walk_side.get_str()},
                                {"product_side", report.product_side.get_str()},
                                {"even_case_pass", report.even_case_pass},
                                {"odd_case_pass", report.odd_case_pass}};
            sink.emit("check forrester", config, result, report.pass);
        });
    }

    {
        auto* cmd = check->add_subcommand("gessel", "bounded-LIS series against the determinant");
        auto d = std::make_shared<int>(1);
        auto order = std::make_shared<std::int64_t>(10);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, kMaxDim));
        cmd->add_option("--order", *order)
            ->check(CLI::Range(std::int64_t{0}, std::int64_t{2 * kUCountMaxN}))
            ->capture_default_str();
        cmd->callback([&sink, d, order] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["order"] = *order;
            const SeriesMatchReport report = gessel_report(*d, *order);
            sink.emit("check gessel", config, match_report_json(report), report.pass,
                      match_report_csv(report));
        });
    }

    {
        auto* cmd = check->add_subcommand("commute", "randomized commutation check");
        auto d = std::make_shared<int>(4);
        auto trials = std::make_shared<int>(1000);
        auto reorders = std::make_shared<int>(200);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        cmd->add_option("--d", *d, "maximum dimension")->check(CLI::Range(1, kMaxDim))
            ->capture_default_str();
        cmd->add_option("--trials", *trials)->check(CLI::Range(1, 100000))->capture_default_str();
        cmd->add_option("--reorders", *reorders)->check(CLI::Range(0, 100000))
            ->capture_default_str();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->callback([&sink, d, trials, reorders, seed] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["trials"] = *trials;
            config["reorders"] = *reorders;
            config["seed"] = *seed;
            const CommuteReport report = commute_check(*d, *trials, *reorders, *seed);
            ordered_json result{{"zero_residuals", report.zero_residuals},
                                {"trials", report.trials},
                                {"equal_reorderings", report.equal_reorderings},
                                {"reorder_trials", report.reorder_trials}};
            sink.emit("check commute", config, result, report.pass);
        });
    }

    {
        auto* cmd = check->add_subcommand("determinantal",
                                          "refined series against the two-point determinant");
        auto mu = std::make_shared<std::vector<std::int64_t>>();
        auto lambda = std::make_shared<std::vector<std::int64_t>>();
        auto order = std::make_shared<std::int64_t>(10);
        cmd->add_option("--mu", *mu, "start configuration")->required()->delimiter(',');
        cmd->add_option("--lambda", *lambda, "end configuration")->required()->delimiter(',');
        cmd->add_option("--order", *order)->check(CLI::Range(std::int64_t{0}, kMaxOrder))
            ->capture_default_str();
        cmd->callback([&sink, mu, lambda, order] {
            require(mu->size() == lambda->size(), "--mu and --lambda must have equal dimension");
            require(!mu->empty() && static_cast<int>(mu->size()) <= 3,
                    "dimension must lie in [1, 3]");
            const Configuration a = config_from(*mu);
            const Configuration b = config_from(*lambda);
            ordered_json config = base_config(sink);
            config["mu"] = int_vector_json(a.parts());
            config["lambda"] = int_vector_json(b.parts());
            config["order"] = *order;
            const SeriesMatchReport report = determinantal_report(a.dim(), a, b, *order);
            sink.emit("check determinantal", config, match_report_json(report), report.pass,
                      match_report_csv(report));
        });
    }

    {
        auto* cmd = check->add_subcommand("rsk-chain", "tableau-walk route to the ground count");
        auto d = std::make_shared<int>(1);
        auto n = std::make_shared<std::int64_t>(0);
        auto q = std::make_shared<std::int64_t>(0);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, kMaxDim));
        cmd->add_option("--n", *n)->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{8}));
        cmd->add_option("--q", *q)->check(CLI::Range(std::int64_t{0}, std::int64_t{8}))
            ->capture_default_str();
        cmd->callback([&sink, d, n, q] {
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["n"] = *n;
            config["q"] = *q;
            const RskChainReport report = rsk_chain_check(*d, *n, *q);
            ordered_json result{{"refined", report.refined.get_str()},
                                {"lhs", report.lhs.get_str()},
                                {"rhs", report.rhs.get_str()}};
            if (*q == 0) {
                result["young_closed"] = report.young_closed.get_str();
                result["u_value"] = report.u_value.get_str();
            }
            sink.emit("check rsk-chain", config, result, report.pass);
        });
    }

    // ---- mc --------------------------------------------------------------
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimates over random unitaries");
    mc_cmd->require_subcommand(1);
    mc_cmd->fallthrough();

    {
        auto* cmd = mc_cmd->add_subcommand("moments", "trace moment against the exact value");
        auto d = std::make_shared<int>(1);
        auto q = std::make_shared<std::int64_t>(0);
        auto n = std::make_shared<std::int64_t>(1);
        auto samples = std::make_shared<std::int64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        auto workers = std::make_shared<int>(1);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, 4));
        cmd->add_option("--q", *q)->check(CLI::Range(std::int64_t{0}, std::int64_t{128}))
            ->capture_default_str();
        cmd->add_option("--n", *n)->check(CLI::Range(std::int64_t{0}, std::int64_t{6}))
            ->capture_default_str();
        cmd->add_option("--samples", *samples)->capture_default_str();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->add_option("--workers", *workers)->capture_default_str();
        cmd->callback([&sink, d, q, n, samples, seed, workers] {
            check_mc_budget(*samples, *workers);
            require(2 * *n + *d * *q <= kMaxSteps, "exact side exceeds the step budget");
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["q"] = *q;
            config["n"] = *n;
            config["samples"] = *samples;
            config["seed"] = *seed;
            config["workers"] = *workers;
            const MomentIdentityReport report =
                moment_identity_report(*d, *q, *n, *samples, *seed, *workers);
            ordered_json result{{"exact", rational_json(report.exact)},
                                {"exact_value", report.exact_value},
                                {"estimate", estimate_json(report.estimate)},
                                {"deviation", report.deviation},
                                {"tolerance", report.tolerance}};
            sink.emit("mc moments", config, result, report.pass);
        });
    }

    {
        auto* cmd = mc_cmd->add_subcommand("weiwettig",
                                           "unitary-group and truncation routes to the series");
        auto d = std::make_shared<int>(1);
        auto q = std::make_shared<std::int64_t>(0);
        auto x = std::make_shared<double>(0.3);
        auto samples = std::make_shared<std::int64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        auto workers = std::make_shared<int>(1);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, 4));
        cmd->add_option("--q", *q)->check(CLI::Range(std::int64_t{0}, std::int64_t{16}))
            ->capture_default_str();
        cmd->add_option("--x", *x)->check(CLI::Range(-1.0, 1.0))->capture_default_str();
        cmd->add_option("--samples", *samples)->capture_default_str();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->add_option("--workers", *workers)->capture_default_str();
        cmd->callback([&sink, d, q, x, samples, seed, workers] {
            check_mc_budget(*samples, *workers);
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["q"] = *q;
            config["x"] = *x;
            config["samples"] = *samples;
            config["seed"] = *seed;
            config["workers"] = *workers;
            const WeiWettigReport report = wei_wettig_report(*d, *q, *x, *samples, *seed, *workers);
            ordered_json result{{"unitary_side", estimate_json(report.unitary_side)},
                                {"truncation_side", estimate_json(report.truncation_side)},
                                {"series_value", report.series_value},
                                {"difference", report.difference},
                                {"combined_se", report.combined_se},
                                {"sides_agree", report.sides_agree},
                                {"imag_ok", report.imag_ok}};
            sink.emit("mc weiwettig", config, result, report.pass);
        });
    }

    {
        auto* cmd = mc_cmd->add_subcommand("hall", "Schur orthogonality on random spectra");
        auto d = std::make_shared<int>(2);
        auto lambda = std::make_shared<std::vector<std::int64_t>>();
        auto mu = std::make_shared<std::vector<std::int64_t>>();
        auto samples = std::make_shared<std::int64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        auto workers = std::make_shared<int>(1);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, 4));
        cmd->add_option("--lambda", *lambda, "diagram rows; omit for the empty diagram")
            ->delimiter(',');
        cmd->add_option("--mu", *mu, "diagram rows; omit for the empty diagram")->delimiter(',');
        cmd->add_option("--samples", *samples)->capture_default_str();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->add_option("--workers", *workers)->capture_default_str();
        cmd->callback([&sink, d, lambda, mu, samples, seed, workers] {
            check_mc_budget(*samples, *workers);
            const YoungDiagram yl = diagram_from(*lambda);
            const YoungDiagram ym = diagram_from(*mu);
            require(yl.row_count() <= *d && ym.row_count() <= *d,
                    "diagrams must have at most d rows");
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["lambda"] = int_vector_json(yl.rows());
            config["mu"] = int_vector_json(ym.rows());
            config["samples"] = *samples;
            config["seed"] = *seed;
            config["workers"] = *workers;
            const HallProductReport report =
                hall_product_report(yl, ym, *d, *samples, *seed, *workers);
            ordered_json result{{"estimate", estimate_json(report.estimate)},
                                {"expected", report.expected},
                                {"deviation", report.deviation}};
            sink.emit("mc hall", config, result, report.pass);
        });
    }

    {
        auto* cmd = mc_cmd->add_subcommand("gaussian-limit",
                                           "rescaled trace moments along a separation sweep");
        auto d = std::make_shared<int>(1);
        auto n = std::make_shared<std::int64_t>(1);
        auto q_list = std::make_shared<std::vector<std::int64_t>>();
        auto samples = std::make_shared<std::int64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        auto workers = std::make_shared<int>(1);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, 4));
        cmd->add_option("--n", *n)->check(CLI::Range(std::int64_t{0}, std::int64_t{4}))
            ->capture_default_str();
        cmd->add_option("--q-list", *q_list, "ascending separations, comma separated")
            ->required()
            ->delimiter(',');
        cmd->add_option("--samples", *samples)->capture_default_str();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->add_option("--workers", *workers)->capture_default_str();
        cmd->callback([&sink, d, n, q_list, samples, seed, workers] {
            check_mc_budget(*samples, *workers);
            require(!q_list->empty() && q_list->size() <= 8, "q list must have 1..8 entries");
            for (std::int64_t q : *q_list)
                require(q >= 1 && q <= 1024, "q values must lie in [1, 1024]");
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["n"] = *n;
            config["q_list"] = int_vector_json(*q_list);
            config["samples"] = *samples;
            config["seed"] = *seed;
            config["workers"] = *workers;
            const GaussianLimitReport report =
                gaussian_limit_report(*d, *n, *q_list, *samples, *seed, *workers);
            ordered_json rows = ordered_json::array();
            std::ostringstream csv;
            csv << "q,scaled_mean,scaled_se,deviation\n";
            for (const auto& row : report.rows) {
                rows.push_back(ordered_json{{"q", row.q},
                                            {"scaled_mean", row.scaled_mean},
                                            {"scaled_se", row.scaled_se},
                                            {"deviation", row.deviation}});
                csv << row.q << ',' << double_str(row.scaled_mean) << ','
                    << double_str(row.scaled_se) << ',' << double_str(row.deviation) << '\n';
            }
            ordered_json result{{"target", report.target},
                                {"rows", rows},
                                {"shrinking", report.shrinking}};
            sink.emit("mc gaussian-limit", config, result, report.shrinking, csv.str());
        });
    }

    // ---- kernel / density / asymp -----------------------------------------
    auto* kernel = app.add_subcommand("kernel", "determinantal kernel comparisons");
    kernel->require_subcommand(1);
    kernel->fallthrough();
    {
        auto* cmd = kernel->add_subcommand("compare", "rescaled kernel against its limit");
        auto d = std::make_shared<int>(1);
        auto q_list = std::make_shared<std::vector<std::int64_t>>();
        auto radius = std::make_shared<double>(1.0);
        auto grid = std::make_shared<int>(7);
        cmd->add_option("--d", *d)->required()->check(CLI::Range(1, 4));
        cmd->add_option("--q-list", *q_list, "ascending separations, comma separated")
            ->required()
            ->delimiter(',');
        cmd->add_option("--radius", *radius)->check(CLI::Range(0.1, 4.0))->capture_default_str();
        cmd->add_option("--grid", *grid, "grid points per axis")->check(CLI::Range(2, 15))
            ->capture_default_str();
        cmd->callback([&sink, d, q_list, radius, grid] {
            require(!q_list->empty() && q_list->size() <= 8, "q list must have 1..8 entries");
            for (std::int64_t q : *q_list)
                require(q >= 1 && q <= kMaxKernelQ, "q values must lie in [1, 4096]");
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["q_list"] = int_vector_json(*q_list);
            config["radius"] = *radius;
            config["grid"] = *grid;
            const KernelConvergenceReport report =
                kernel_convergence_report(*d, *q_list, *radius, *grid);
            ordered_json rows = ordered_json::array();
            std::ostringstream csv;
            csv << "q,sup_error,disc_integral\n";
            for (const auto& row : report.rows) {
                rows.push_back(ordered_json{{"q", row.q},
                                            {"sup_error", row.sup_error},
                                            {"disc_integral", row.disc_integral}});
                csv << row.q << ',' << double_str(row.sup_error) << ','
                    << double_str(row.disc_integral) << '\n';
            }
            ordered_json result{{"rows", rows},
                                {"origin_exact", report.origin_exact},
                                {"sup_decreasing", report.sup_decreasing},
                                {"disc_integrals_ok", report.disc_integrals_ok}};
            sink.emit("kernel compare", config, result, report.pass, csv.str());
        });
    }

    auto* density = app.add_subcommand("density", "truncation-law density checks");
    density->require_subcommand(1);
    density->fallthrough();
    {
        auto* cmd = density->add_subcommand("check", "empirical radial law against quadrature");
        auto q = std::make_shared<std::int64_t>(1);
        auto samples = std::make_shared<std::int64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        auto workers = std::make_shared<int>(1);
        auto tolerance = std::make_shared<double>(0.01);
        cmd->add_option("--q", *q)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
        cmd->add_option("--samples", *samples)->capture_default_str();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->add_option("--workers", *workers)->capture_default_str();
        cmd->add_option("--tolerance", *tolerance)->check(CLI::Range(1e-6, 1.0))
            ->capture_default_str();
        cmd->callback([&sink, q, samples, seed, workers, tolerance] {
            check_mc_budget(*samples, *workers);
            ordered_json config = base_config(sink);
            config["q"] = *q;
            config["samples"] = *samples;
            config["seed"] = *seed;
            config["workers"] = *workers;
            config["tolerance"] = *tolerance;
            const DensityCheckReport report =
                density_radial_check(*q, *samples, *seed, *workers, *tolerance);
            ordered_json result{{"ks_distance", report.ks_distance},
                                {"total_mass", report.total_mass},
                                {"tolerance", report.tolerance}};
            sink.emit("density check", config, result, report.pass);
        });
    }

    auto* asymp = app.add_subcommand("asymp", "asymptotic-form diagnostics");
    asymp->require_subcommand(1);
    asymp->fallthrough();
    {
        auto* cmd = asymp->add_subcommand("ratio", "exact counts against the asymptotic form");
        auto d = std::make_shared<int>(1);
        auto q = std::make_shared<std::int64_t>(200);
        auto n_list = std::make_shared<std::vector<std::int64_t>>();
        auto tolerance = std::make_shared<double>(0.05);
        cmd->add_option("--d", *d)->check(CLI::Range(1, 3))->capture_default_str();
        cmd->add_option("--q", *q)->check(CLI::Range(std::int64_t{1}, kMaxAsympQ))
            ->capture_default_str();
        cmd->add_option("--n-list", *n_list, "moment orders, comma separated")
            ->required()
            ->delimiter(',');
        cmd->add_option("--tolerance", *tolerance)->check(CLI::Range(1e-6, 1.0))
            ->capture_default_str();
        cmd->callback([&sink, d, q, n_list, tolerance] {
            require(!n_list->empty() && n_list->size() <= 8, "n list must have 1..8 entries");
            for (std::int64_t n : *n_list)
                require(n >= 0 && n <= 12, "n values must lie in [0, 12]");
            require(*d == 1 || *q <= 300, "for d > 1 the step budget caps q at 300");
            ordered_json config = base_config(sink);
            config["d"] = *d;
            config["q"] = *q;
            config["n_list"] = int_vector_json(*n_list);
            config["tolerance"] = *tolerance;
            const AsymptoticReport report = asymptotic_ratio_report(*d, *n_list, *q, *tolerance);
            ordered_json rows = ordered_json::array();
            std::ostringstream csv;
            csv << "n,exact,rhs,raw_ratio,adjusted_ratio,adjusted_within\n";
            for (const auto& row : report.rows) {
                rows.push_back(ordered_json{{"n", row.n},
                                            {"exact", row.exact},
                                            {"rhs", row.rhs},
                                            {"raw_ratio", row.raw_ratio},
                                            {"adjusted_ratio", row.adjusted_ratio},
                                            {"adjusted_within", row.adjusted_within}});
                csv << row.n << ',' << row.exact << ',' << double_str(row.rhs) << ','
                    << double_str(row.raw_ratio) << ',' << double_str(row.adjusted_ratio) << ','
                    << (row.adjusted_within ? "true" : "false") << '\n';
            }
            ordered_json result{{"rel_tolerance", report.rel_tolerance}, {"rows", rows}};
            sink.emit("asymp ratio", config, result, report.pass, csv.str());
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return sink.exit_code;
}

}  // namespace turnwalk::cli
