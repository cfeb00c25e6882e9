// Command line front end: exact growth series, witness constructions and
// verification checks for groups Z^d x F.
//
// Exit codes are a stable contract:
//   0  success
//   2  ingestion failure (unreadable or malformed document)
//   3  generation-check failure (the set does not generate)
//   4  resource cap hit (memory or coordinate budget)
//   5  parity mismatch (witness gate or parity check)

#include <abelgrowth/bfs.hpp>
#include <abelgrowth/bounds.hpp>
#include <abelgrowth/errors.hpp>
#include <abelgrowth/formulas.hpp>
#include <abelgrowth/generating_set.hpp>
#include <abelgrowth/group.hpp>
#include <abelgrowth/growth_series.hpp>
#include <abelgrowth/io.hpp>
#include <abelgrowth/torsion_group.hpp>
#include <abelgrowth/witnesses.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace abelgrowth;

struct RunConfig {
    std::vector<std::string> specs;
    std::string out_path;
    std::string out_dir = ".";
    std::string format = "csv";
    std::string check;
    std::string what;
    std::string regime;
    std::string torsion_list;
    std::string window_text;
    int radius = -1; // -1 = per-command default
    int rank = 1;
    int box = 6;
    long long common_multiple = 0; // 0 = least common multiple
    ResourceBudget budget;
};

ResourceBudget budget_from_env() {
    ResourceBudget budget;
    if (const char* cap = std::getenv("ABELGROWTH_MEM_CAP")) {
        try {
            budget.mem_cap_bytes = std::stoull(cap);
        } catch (const std::exception&) {
            throw ValidationError("ABELGROWTH_MEM_CAP must be a byte count, got '" +
                                  std::string(cap) + "'");
        }
    }
    if (const char* bits = std::getenv("ABELGROWTH_COORD_BITS")) {
        try {
            budget.coord_bits = std::stoi(bits);
        } catch (const std::exception&) {
            throw ValidationError("ABELGROWTH_COORD_BITS must be an integer, got '" +
                                  std::string(bits) + "'");
        }
        if (budget.coord_bits < 1 || budget.coord_bits > 63) {
            throw ValidationError("ABELGROWTH_COORD_BITS must be in [1, 63]");
        }
    }
    return budget;
}

// Torsion descriptions on the command line: "1" for trivial, "6" for Z/6,
// "2x4" for Z/2 x Z/4, "s3" for the symmetric group on 3 letters.
TorsionGroup parse_torsion(const std::string& text) {
    if (text.empty()) throw ValidationError("empty torsion description");
    if (text[0] == 's' || text[0] == 'S') {
        const int n = std::stoi(text.substr(1));
        return symmetric_group(n);
    }
    std::vector<int> factors;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, 'x')) {
        int f = 0;
        try {
            f = std::stoi(part);
        } catch (const std::exception&) {
            throw ValidationError("torsion description '" + text + "' is not a factor list");
        }
        if (f != 1) factors.push_back(f);
    }
    if (factors.empty()) return TorsionGroup::trivial();
    return TorsionGroup::from_invariant_factors(factors);
}

std::vector<TorsionGroup> parse_torsion_list(const std::string& text) {
    std::vector<TorsionGroup> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(parse_torsion(part));
    if (out.empty()) throw ValidationError("--torsion needs at least one entry");
    return out;
}

RadiusWindow parse_window(const std::string& text, int fallback_hi) {
    if (text.empty()) return {1, fallback_hi};
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ValidationError("--window expects A:B, got '" + text + "'");
    }
    try {
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ValidationError("--window expects integers A:B, got '" + text + "'");
    }
}

GeneratingSet realize_lenient(const ParsedGroupDocument& doc, const ResourceBudget& budget) {
    GeneratingSet::Options options;
    options.budget = budget;
    options.require_monoid_certificate = false;
    GeneratingSet set = realize(doc, options);
    if (set.kind() == SetKind::Monoid && !set.monoid_certified()) {
        std::cerr << "note: monoid generation not certified (" << set.generation_check().detail
                  << "); growth values are still exact\n";
    }
    return set;
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.out_path.empty()) {
        std::cout << text;
    } else {
        write_file(config.out_path, text);
        std::cout << "wrote " << config.out_path << "\n";
    }
}

int cmd_compute(const RunConfig& config) {
    const int radius = config.radius < 0 ? 10 : config.radius;
    ParsedGroupDocument doc = load_group_document(config.specs.at(0));
    GeneratingSet set = realize_lenient(doc, config.budget);
    BfsResult run = bfs_growth(set, {.max_radius = radius, .keep_ball = false,
                                     .budget = config.budget});
    emit(config, config.format == "json" ? series_to_json(run.series, doc)
                                         : series_to_csv(run.series));
    return 0;
}

int cmd_compare(const RunConfig& config) {
    const int radius = config.radius < 0 ? 30 : config.radius;
    ParsedGroupDocument doc_a = load_group_document(config.specs.at(0));
    ParsedGroupDocument doc_b = load_group_document(config.specs.at(1));
    GeneratingSet set_a = realize_lenient(doc_a, config.budget);
    GeneratingSet set_b = realize_lenient(doc_b, config.budget);
    BfsOptions options{.max_radius = radius, .keep_ball = false, .budget = config.budget};
    GrowthSeries series_a = bfs_growth(set_a, options).series;
    GrowthSeries series_b = bfs_growth(set_b, options).series;
    SeriesComparison cmp = compare_series(series_a, series_b, radius);
    if (cmp.equal) {
        std::cout << "equal up to " << cmp.compared_radius << "\n";
    } else {
        std::cout << "first disagreement at r=" << cmp.first_disagreement << " (sigma "
                  << series_a.sigma_at(cmp.first_disagreement) << " vs "
                  << series_b.sigma_at(cmp.first_disagreement) << ")\n";
    }
    return 0;
}

void write_witness_document(const std::filesystem::path& dir, const std::string& name,
                            const GeneratingSet& set) {
    ParsedGroupDocument doc = document_from_set(set);
    const auto path = (dir / name).string();
    write_file(path, serialize_group_document(doc));
    std::cout << "wrote " << path << " (" << spec_content_hash(doc) << ")";
    if (set.kind() == SetKind::Monoid && !set.monoid_certified()) {
        std::cout << " [monoid certificate missing: " << set.generation_check().detail << "]";
    }
    std::cout << "\n";
}

int cmd_witness(const RunConfig& config) {
    const int radius = config.radius < 0 ? 50 : config.radius;
    std::vector<TorsionGroup> torsions = parse_torsion_list(config.torsion_list);
    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);

    if (config.regime == "symmetric") {
        if (torsions.size() != 2) {
            throw ValidationError("symmetric witnesses need exactly two torsion entries");
        }
        if (torsions[0].order() % 2 != torsions[1].order() % 2) {
            std::cerr << "error: torsion orders " << torsions[0].order() << " and "
                      << torsions[1].order() << " differ in parity\n";
            return 5;
        }
        WitnessPair pair = witness_symmetric(torsions[0], torsions[1], config.rank, radius);
        write_witness_document(dir, "left.json", pair.left);
        write_witness_document(dir, "right.json", pair.right);
        write_file((dir / "predicted.csv").string(), series_to_csv(pair.predicted));
        std::cout << "wrote " << (dir / "predicted.csv").string() << " (regime "
                  << to_string(pair.regime) << ")\n";
        return 0;
    }
    if (config.regime == "monoid") {
        std::optional<long long> multiple;
        if (config.common_multiple > 0) multiple = config.common_multiple;
        MonoidWitnesses witnesses = witness_monoid(torsions, config.rank, multiple, radius);
        for (std::size_t i = 0; i < witnesses.sets.size(); ++i) {
            write_witness_document(dir, "monoid-" + std::to_string(i + 1) + ".json",
                                   witnesses.sets[i]);
        }
        write_file((dir / "predicted.csv").string(), series_to_csv(witnesses.predicted));
        std::cout << "wrote " << (dir / "predicted.csv").string() << " (common multiple "
                  << witnesses.common_multiple << ")\n";
        return 0;
    }
    throw ValidationError("--regime must be symmetric or monoid");
}

int report(bool pass, const std::string& name, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    return pass ? 0 : 1;
}

int cmd_verify(const RunConfig& config) {
    if (config.check == "diophantine") {
        DiophantineReport dio = diophantine_uniqueness(config.box > 0 ? config.box : 100);
        std::ostringstream os;
        os << dio.collisions_checked << " sum/product collisions in [0, " << dio.bound
           << "]^4, " << dio.violations.size() << " outside {x1,y1} = {x2,y2}";
        return report(dio.unique(), "diophantine", os.str());
    }
    if (config.check == "counterexample") {
        ConverseReport conv = converse_counterexample(config.rank);
        std::ostringstream os;
        os << "d=" << conv.d << ": ball(1) in Z^d x Z/" << (1 << (conv.d + 3)) << " has "
           << conv.beta_g_at_1 << " elements, any ball(1) in Z^d x (Z/2)^" << (conv.d + 3)
           << " has at least " << conv.beta_gprime_at_1_floor;
        return report(conv.separated && conv.hypotheses_match, "counterexample", os.str());
    }

    if (config.specs.empty()) {
        throw ValidationError("check '" + config.check + "' needs --spec");
    }
    ParsedGroupDocument doc = load_group_document(config.specs[0]);
    GeneratingSet set = realize_lenient(doc, config.budget);
    const int radius = config.radius < 0 ? 30 : config.radius;

    if (config.check == "phi") {
        PhiContext ctx = build_phi(set);
        PhiVerification ver = verify_phi(ctx, config.box, config.radius < 0 ? 10 : config.radius,
                                         config.budget);
        std::ostringstream os;
        os << "box " << ver.box << ", radius " << ver.radius;
        if (!ver.ok()) os << ", " << ver.failure;
        return report(ver.ok(), "phi", os.str());
    }
    if (config.check == "reduction") {
        ReductionReport red = reduction_inequality(set, radius, config.budget);
        std::ostringstream os;
        os << "torsion diameter " << red.torsion_diameter << ", radii " << red.torsion_diameter
           << ".." << radius;
        if (!red.holds) os << ", first violation at r=" << red.first_violation;
        return report(red.holds, "reduction", os.str());
    }
    if (config.check == "min-growth") {
        DominanceReport dom = symmetric_min_growth(set, radius, config.budget);
        std::ostringstream os;
        os << "radii 0.." << radius;
        if (!dom.holds) os << ", first violation at r=" << dom.first_violation;
        return report(dom.holds, "min-growth", os.str());
    }
    if (config.check == "parity") {
        ParityPrediction prediction = parity_prediction(set, config.budget);
        GrowthSeries series =
            bfs_growth(set, {.max_radius = radius, .keep_ball = false, .budget = config.budget})
                .series;
        ParityReport parity = verify_parity(series, prediction);
        std::ostringstream os;
        os << "residue " << prediction.residue << " from r=" << prediction.threshold
           << " (census " << prediction.census << ")";
        if (!parity.consistent) os << ", violated at r=" << parity.first_violation;
        const int code = report(parity.consistent, "parity", os.str());
        return code == 0 ? 0 : 5;
    }

    // Two report-style extras beyond the named assertions: window estimates
    // for the torsion order and the rank. They print values, never fail.
    if (config.check == "torsion-bound" || config.check == "rank") {
        GrowthSeries series =
            bfs_growth(set, {.max_radius = radius, .keep_ball = false, .budget = config.budget})
                .series;
        const RadiusWindow window = parse_window(config.window_text, radius);
        if (config.check == "torsion-bound") {
            TorsionBoundReport bound =
                torsion_upper_bound(series, set.group().rank(), window, set.kind());
            std::cout << "max beta(r)/" << (bound.monoid_mode ? "beta+_d(r)" : "beta_d(r)")
                      << " over r in [" << window.lo << ", " << window.hi << "] is "
                      << bound.max_ratio << " at r=" << bound.argmax_radius << "; floor "
                      << bound.candidate_floor << "\n";
        } else {
            RankEstimate estimate = rank_estimate(series, window);
            std::cout << "log-log slope " << std::fixed << std::setprecision(4) << estimate.slope
                      << " over r in [" << window.lo << ", " << window.hi << "], nearest rank "
                      << estimate.rounded << "\n";
        }
        return 0;
    }
    throw ValidationError("unknown check '" + config.check + "'");
}

int cmd_oracle(const RunConfig& config) {
    const int radius = config.radius < 0 ? 10 : config.radius;
    if (radius < 0) throw ValidationError("--radius must be nonnegative");
    std::ostringstream os;
    os << "r,beta\n";
    for (int r = 0; r <= radius; ++r) {
        const Count value = config.what == "beta-std" ? beta_standard(config.rank, r)
                                                      : beta_standard_plus(config.rank, r);
        os << r << ',' << value << '\n';
    }
    emit(config, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact growth of finitely generated groups Z^d x F"};
    app.require_subcommand(1);

    RunConfig config;

    CLI::App* compute = app.add_subcommand("compute", "BFS growth series of a group document");
    compute->add_option("--spec", config.specs, "group-spec document")->required()->expected(1);
    compute->add_option("--radius", config.radius, "maximum radius (default 10)");
    compute->add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    compute->add_option("--out", config.out_path, "output file (default stdout)");

    CLI::App* compare = app.add_subcommand("compare", "compare the growth of two documents");
    compare->add_option("--spec", config.specs, "the two documents, --spec A --spec B")
        ->required()
        ->expected(2);
    compare->add_option("--radius", config.radius, "comparison radius (default 30)");

    CLI::App* witness = app.add_subcommand("witness", "emit equal-growth witness documents");
    witness->add_option("--regime", config.regime, "symmetric or monoid")->required();
    witness->add_option("--torsion", config.torsion_list,
                        "comma list of torsion groups, e.g. 2,4 or 1,2,3 or s3,6")
        ->required();
    witness->add_option("--rank", config.rank, "lattice rank d >= 1 (default 1)");
    witness->add_option("--common-multiple", config.common_multiple,
                        "monoid regime: common multiple K (default lcm)");
    witness->add_option("--out-dir", config.out_dir, "output directory (default .)");
    witness->add_option("--radius", config.radius, "predicted series length (default 50)");

    CLI::App* verify = app.add_subcommand("verify", "run a named verification check");
    verify->add_option("--check", config.check,
                       "phi|reduction|min-growth|parity|counterexample|diophantine|torsion-bound|rank")
        ->required();
    verify->add_option("--spec", config.specs, "group-spec document (checks that need one)")
        ->expected(1);
    verify->add_option("--radius", config.radius, "radius for the check");
    verify->add_option("--box", config.box, "box half-width (phi) or scan bound (diophantine)");
    verify->add_option("--rank", config.rank, "rank d for counterexample (default 1)");
    verify->add_option("--window", config.window_text, "radius window A:B");

    CLI::App* oracle = app.add_subcommand("oracle", "closed-form ball counts of standard sets");
    oracle->add_option("--what", config.what, "beta-std or beta-std-plus")
        ->required()
        ->check(CLI::IsMember({"beta-std", "beta-std-plus"}));
    oracle->add_option("--rank", config.rank, "rank d")->required();
    oracle->add_option("--radius", config.radius, "maximum radius")->required();
    oracle->add_option("--out", config.out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        config.budget = budget_from_env();
        if (compute->parsed()) return cmd_compute(config);
        if (compare->parsed()) return cmd_compare(config);
        if (witness->parsed()) return cmd_witness(config);
        if (verify->parsed()) return cmd_verify(config);
        if (oracle->parsed()) return cmd_oracle(config);
    } catch (const IngestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
