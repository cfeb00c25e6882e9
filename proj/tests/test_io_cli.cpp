#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abelgrowth/bfs.hpp"
#include "abelgrowth/errors.hpp"
#include "abelgrowth/io.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace abelgrowth;
using oracle::el;
namespace fs = std::filesystem;

namespace {

const char* kLineDoc = R"({
  "generators": [
    {
      "tor": 0,
      "vec": [
        1
      ]
    },
    {
      "tor": 0,
      "vec": [
        -1
      ]
    }
  ],
  "kind": "symmetric",
  "rank": 1,
  "torsion": {
    "invariants": []
  }
}
)";

std::string ingest_message(const std::string& text) {
    try {
        parse_group_document(text);
    } catch (const IngestError& e) {
        return e.what();
    }
    return "";
}

// Working copy of the line document as JSON, for making broken variants.
nlohmann::json line_json() { return nlohmann::json::parse(kLineDoc); }

} // namespace

TEST_CASE("parsing the canonical document reproduces its bytes") {
    ParsedGroupDocument doc = parse_group_document(kLineDoc);
    CHECK(doc.rank == 1);
    CHECK(doc.kind == SetKind::Symmetric);
    REQUIRE(doc.invariant_factors.has_value());
    CHECK(doc.invariant_factors->empty());
    CHECK_FALSE(doc.table.has_value());
    CHECK(doc.generators == std::vector<GroupElement>{el({1}), el({-1})});

    CHECK(serialize_group_document(doc) == kLineDoc);
    CHECK(spec_content_hash(doc) == "fnv1a64:7f2a9137786287a9");
}

TEST_CASE("a known mixed document hashes to its frozen value") {
    ParsedGroupDocument doc;
    doc.rank = 1;
    doc.invariant_factors = std::vector<int>{2};
    doc.generators = {el({0}, 0), el({0}, 1), el({-1}, 0), el({1}, 0)};
    doc.kind = SetKind::Symmetric;
    CHECK(spec_content_hash(doc) == "fnv1a64:5b75efbed9b9e840");

    // the hash follows the canonical bytes, so generator order matters
    std::swap(doc.generators[0], doc.generators[1]);
    CHECK(spec_content_hash(doc) != "fnv1a64:5b75efbed9b9e840");
}

TEST_CASE("documents with explicit tables round trip") {
    ParsedGroupDocument doc;
    doc.rank = 1;
    doc.table = symmetric_group(3).table();
    doc.kind = SetKind::Monoid;
    doc.generators = {el({-1}, 0), el({0}, 0), el({0}, 1), el({0}, 2),
                      el({0}, 3), el({0}, 4), el({0}, 5)};
    std::string text = serialize_group_document(doc);
    ParsedGroupDocument back = parse_group_document(text);
    CHECK(back.table == doc.table);
    CHECK_FALSE(back.invariant_factors.has_value());
    CHECK(back.generators == doc.generators);
    CHECK(serialize_group_document(back) == text);
    CHECK(back.make_torsion().order() == 6);
    CHECK_FALSE(back.make_torsion().abelian());
}

TEST_CASE("ingest failures carry the offending field") {
    nlohmann::json j = line_json();
    j.erase("rank");
    CHECK(ingest_message(j.dump()).find("'rank'") != std::string::npos);

    j = line_json();
    j["kind"] = "group";
    CHECK(ingest_message(j.dump()).find("'kind'") != std::string::npos);

    j = line_json();
    j["torsion"]["table"] = {{0}};
    std::string both = ingest_message(j.dump());
    CHECK(both.find("'torsion'") != std::string::npos);

    j = line_json();
    j["torsion"].erase("invariants");
    CHECK(ingest_message(j.dump()).find("'torsion'") != std::string::npos);

    j = line_json();
    j["generators"][0]["vec"] = {1, 0};
    CHECK(ingest_message(j.dump()).find("'generators") != std::string::npos);

    j = line_json();
    j["generators"][1]["tor"] = 1;
    CHECK_FALSE(ingest_message(j.dump()).empty());

    j = line_json();
    j["rank"] = 2.5;
    CHECK(ingest_message(j.dump()).find("'rank'") != std::string::npos);

    j = line_json();
    j["rank"] = 65;
    CHECK(ingest_message(j.dump()).find("'rank'") != std::string::npos);

    j = line_json();
    j["generators"] = nlohmann::json::array();
    CHECK(ingest_message(j.dump()).find("'generators'") != std::string::npos);

    j = line_json();
    j["extra"] = true;
    CHECK(ingest_message(j.dump()).find("extra") != std::string::npos);

    // malformed JSON reports where it broke
    std::string msg = ingest_message("{\n  \"rank\": 1,\n  !\n}");
    CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("invariant factors below two are rejected at parse time") {
    nlohmann::json j = line_json();
    j["torsion"]["invariants"] = {1, 2};
    CHECK(ingest_message(j.dump()).find("torsion.invariants[0]") != std::string::npos);
}

TEST_CASE("realize runs the full generation gate") {
    ParsedGroupDocument doc = parse_group_document(kLineDoc);
    GeneratingSet s = realize(doc);
    CHECK(s.size() == 2);
    CHECK(s.kind() == SetKind::Symmetric);
    CHECK(s.generation_check().generates());

    // well-formed but not closed under inverses
    nlohmann::json j = line_json();
    j["generators"].erase(1);
    ParsedGroupDocument open = parse_group_document(j.dump());
    CHECK_THROWS_AS(realize(open), ValidationError);

    // well-formed but a proper subgroup
    nlohmann::json sub = line_json();
    sub["generators"][0]["vec"] = {2};
    sub["generators"][1]["vec"] = {-2};
    ParsedGroupDocument subdoc = parse_group_document(sub.dump());
    CHECK_THROWS_AS(realize(subdoc), GenerationError);
}

TEST_CASE("document_from_set inverts realize") {
    GroupSpec spec(1, TorsionGroup::from_invariant_factors({2, 4}));
    std::vector<GroupElement> half = {el({1}, 0), el({0}, 1), el({0}, 4)};
    GeneratingSet s =
        GeneratingSet::create(spec, symmetric_closure(spec, half), SetKind::Symmetric);
    ParsedGroupDocument doc = document_from_set(s);
    REQUIRE(doc.invariant_factors.has_value());
    CHECK(*doc.invariant_factors == std::vector<int>{2, 4});
    GeneratingSet back = realize(doc);
    CHECK(back.elements() == s.elements());
    CHECK(back.group().same_group(s.group()));

    // nonabelian groups come back as explicit tables
    GroupSpec s3spec(0, symmetric_group(3));
    GeneratingSet t = GeneratingSet::create(s3spec, {el({}, 1), el({}, 2)}, SetKind::Monoid);
    ParsedGroupDocument tdoc = document_from_set(t);
    CHECK(tdoc.table.has_value());
    CHECK(realize(tdoc).elements() == t.elements());
}

TEST_CASE("csv rendering is exact") {
    GrowthSeries s({1, 2, 2}, Provenance::Bfs);
    CHECK(series_to_csv(s) == "r,sigma,beta\n0,1,1\n1,2,3\n2,2,5\n");
}

TEST_CASE("json rendering embeds the document and its hash") {
    ParsedGroupDocument doc = parse_group_document(kLineDoc);
    GrowthSeries series = bfs_growth(realize(doc), {.max_radius = 3}).series;
    nlohmann::json j = nlohmann::json::parse(series_to_json(series, doc));
    CHECK(j["spec_hash"] == "fnv1a64:7f2a9137786287a9");
    CHECK(j["group"] == line_json());
    CHECK(j["series"]["provenance"] == "bfs");
    CHECK(j["series"]["radius"] == 3);
    CHECK(j["series"]["sigma"] == nlohmann::json({"1", "2", "2", "2"}));
    CHECK(j["series"]["beta"] == nlohmann::json({"1", "3", "5", "7"}));
}

TEST_CASE("file io") {
    fs::path dir = fs::temp_directory_path() / "abelgrowth-io-test";
    fs::create_directories(dir);
    std::string path = (dir / "doc.json").string();
    write_file(path, kLineDoc);
    CHECK(read_file(path) == kLineDoc);
    ParsedGroupDocument doc = load_group_document(path);
    CHECK(doc.generators.size() == 2);
    CHECK_THROWS_AS(load_group_document((dir / "missing.json").string()), IngestError);
    fs::remove_all(dir);
}

// --- the command-line tool --------------------------------------------------

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args, const fs::path& dir) {
    fs::path out = dir / "stdout.txt";
    fs::path err = dir / "stderr.txt";
    std::string cmd = std::string(ABELGROWTH_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    CliResult res;
    if (WIFEXITED(rc)) res.exit_code = WEXITSTATUS(rc);
    res.out = read_file(out.string());
    res.err = read_file(err.string());
    return res;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("abelgrowth-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("cli compute writes exact csv and json") {
    TempDir tmp;
    std::string spec = (tmp.path / "z.json").string();
    write_file(spec, kLineDoc);

    std::string csv = (tmp.path / "out.csv").string();
    CliResult r = run_cli("compute --spec " + spec + " --radius 3 --out " + csv, tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(read_file(csv) == "r,sigma,beta\n0,1,1\n1,2,3\n2,2,5\n3,2,7\n");

    CliResult j = run_cli("compute --spec " + spec + " --radius 2 --format json", tmp.path);
    CHECK(j.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["series"]["beta"] == nlohmann::json({"1", "3", "5"}));
}

TEST_CASE("cli exit codes follow the error taxonomy") {
    TempDir tmp;

    // 2: unreadable or malformed input
    CliResult missing = run_cli("compute --spec " + (tmp.path / "nope.json").string(), tmp.path);
    CHECK(missing.exit_code == 2);

    nlohmann::json bad = line_json();
    bad.erase("kind");
    std::string badpath = (tmp.path / "bad.json").string();
    write_file(badpath, bad.dump());
    CliResult malformed = run_cli("compute --spec " + badpath, tmp.path);
    CHECK(malformed.exit_code == 2);
    CHECK(malformed.err.find("kind") != std::string::npos);

    // 3: well-formed but fails the generation gate
    nlohmann::json sub = line_json();
    sub["generators"][0]["vec"] = {2};
    sub["generators"][1]["vec"] = {-2};
    std::string subpath = (tmp.path / "sub.json").string();
    write_file(subpath, sub.dump());
    CliResult subgroup = run_cli("compute --spec " + subpath, tmp.path);
    CHECK(subgroup.exit_code == 3);

    // 5: witness parity gate
    CliResult parity = run_cli(
        "witness --regime symmetric --torsion 2,3 --out-dir " + tmp.path.string(), tmp.path);
    CHECK(parity.exit_code == 5);
    CHECK(parity.err.find("parity") != std::string::npos);
}

TEST_CASE("cli witness emits canonical re-ingestable documents") {
    TempDir tmp;
    CliResult r = run_cli("witness --regime symmetric --torsion 2,4 --radius 20 --out-dir " +
                              tmp.path.string(),
                          tmp.path);
    CHECK(r.exit_code == 0);

    for (const char* name : {"left.json", "right.json"}) {
        std::string path = (tmp.path / name).string();
        std::string bytes = read_file(path);
        ParsedGroupDocument doc = parse_group_document(bytes);
        CHECK(serialize_group_document(doc) == bytes); // byte-identical round trip
        GeneratingSet s = realize(doc);
        GrowthSeries series = bfs_growth(s, {.max_radius = 20}).series;
        CHECK(series.sigma_at(1) == 5);
        CHECK(series.sigma_at(2) == 8);
    }
    CHECK(read_file((tmp.path / "predicted.csv").string()).substr(0, 12) == "r,sigma,beta");
    // the tool reports each written file with its content hash
    CHECK(r.out.find("fnv1a64:") != std::string::npos);
}

TEST_CASE("cli monoid witnesses flag the uncertifiable degenerate width") {
    TempDir tmp;
    CliResult r = run_cli("witness --regime monoid --torsion 2,3 --common-multiple 6 "
                          "--radius 15 --out-dir " + tmp.path.string(),
                          tmp.path);
    CHECK(r.exit_code == 0);
    ParsedGroupDocument doc = load_group_document((tmp.path / "monoid-1.json").string());
    GeneratingSet s = realize(doc);
    GrowthSeries series = bfs_growth(s, {.max_radius = 15}).series;
    for (int rr = 1; rr <= 15; ++rr) CHECK(series.sigma_at(rr) == 6);

    // width one: still exit 0, but the missing certificate is reported
    CliResult deg = run_cli("witness --regime monoid --torsion 2 --common-multiple 2 "
                            "--out-dir " + tmp.path.string(),
                            tmp.path);
    CHECK(deg.exit_code == 0);
    CHECK(deg.out.find("certificate missing") != std::string::npos);
}

TEST_CASE("cli compare agrees with the library") {
    TempDir tmp;
    std::string a = (tmp.path / "a.json").string();
    std::string b = (tmp.path / "b.json").string();

    // Z x Z/2 wide against Z x Z/4 narrow: equal growth
    run_cli("witness --regime symmetric --torsion 2,4 --out-dir " + tmp.path.string(), tmp.path);
    CliResult eq = run_cli("compare --spec " + (tmp.path / "left.json").string() + " --spec " +
                               (tmp.path / "right.json").string() + " --radius 25",
                           tmp.path);
    CHECK(eq.exit_code == 0);
    CHECK(eq.out.find("equal up to 25") != std::string::npos);

    write_file(a, kLineDoc);
    nlohmann::json wide = line_json();
    wide["generators"][0]["vec"] = {2};
    wide["generators"][1]["vec"] = {-2};
    wide["generators"].push_back({{"tor", 0}, {"vec", {3}}});
    wide["generators"].push_back({{"tor", 0}, {"vec", {-3}}});
    write_file(b, wide.dump());
    CliResult ne = run_cli("compare --spec " + a + " --spec " + b + " --radius 25", tmp.path);
    CHECK(ne.exit_code == 0);
    CHECK(ne.out.find("disagreement at r=1") != std::string::npos);
}

TEST_CASE("cli verify runs the named checks") {
    TempDir tmp;
    std::string spec = (tmp.path / "z.json").string();
    write_file(spec, kLineDoc);

    CliResult dio = run_cli("verify --check diophantine --box 20", tmp.path);
    CHECK(dio.exit_code == 0);
    CHECK(dio.out.find("[PASS]") != std::string::npos);

    CliResult par = run_cli("verify --check parity --spec " + spec + " --radius 20", tmp.path);
    CHECK(par.exit_code == 0);
    CHECK(par.out.find("[PASS]") != std::string::npos);

    CliResult red = run_cli("verify --check reduction --spec " + spec + " --radius 20", tmp.path);
    CHECK(red.exit_code == 0);

    CliResult conv = run_cli("verify --check counterexample --rank 2", tmp.path);
    CHECK(conv.exit_code == 0);
    CHECK(conv.out.find("[PASS]") != std::string::npos);

    // checks that need a document say so
    CliResult nospec = run_cli("verify --check parity", tmp.path);
    CHECK(nospec.exit_code == 2);
}

TEST_CASE("cli oracle prints closed-form ball counts") {
    TempDir tmp;
    CliResult r = run_cli("oracle --what beta-std --rank 2 --radius 3", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "r,beta\n0,1\n1,5\n2,13\n3,25\n");

    CliResult p = run_cli("oracle --what beta-std-plus --rank 2 --radius 3", tmp.path);
    CHECK(p.exit_code == 0);
    CHECK(p.out == "r,beta\n0,1\n1,4\n2,10\n3,19\n");
}
