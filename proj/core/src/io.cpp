#include "abelgrowth/io.hpp"

#include "abelgrowth/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

namespace abelgrowth {

namespace {

using nlohmann::json;

// nlohmann's default object keeps keys in std::map order, which is exactly
// the sorted order the canonical form asks for. One indent width, one
// trailing newline, no other degrees of freedom.
std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw IngestError("field '" + field + "': " + why);
}

void expect_keys(const json& j, const std::string& where,
                 std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || item.key() == k;
        if (!known) fail(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
    }
    for (const char* k : allowed) {
        if (!j.contains(k)) fail(where.empty() ? k : where + "." + k, "missing");
    }
}

std::int64_t get_integer(const json& j, const std::string& field) {
    if (!j.is_number_integer()) fail(field, "must be an integer (64-bit signed)");
    return j.get<std::int64_t>();
}

int get_small_int(const json& j, const std::string& field, int lo, int hi) {
    const std::int64_t v = get_integer(j, field);
    if (v < lo || v > hi) {
        fail(field, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(v);
}

std::pair<int, int> line_of(const std::string& text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json torsion_to_json(const ParsedGroupDocument& doc) {
    json t = json::object();
    if (doc.invariant_factors) {
        t["invariants"] = *doc.invariant_factors;
    } else {
        t["table"] = *doc.table;
    }
    return t;
}

} // namespace

TorsionGroup ParsedGroupDocument::make_torsion() const {
    try {
        if (invariant_factors) {
            return invariant_factors->empty() ? TorsionGroup::trivial()
                                              : TorsionGroup::from_invariant_factors(*invariant_factors);
        }
        return TorsionGroup::from_table(*table);
    } catch (const ValidationError& e) {
        throw IngestError(std::string("field 'torsion': ") + e.what());
    }
}

GroupSpec ParsedGroupDocument::make_spec() const { return GroupSpec(rank, make_torsion()); }

ParsedGroupDocument parse_group_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_of(text, e.byte);
        throw IngestError("not valid JSON (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + "): " + e.what());
    }
    if (!j.is_object()) throw IngestError("top level must be an object");
    expect_keys(j, "", {"generators", "kind", "rank", "torsion"});

    ParsedGroupDocument doc;
    doc.rank = get_small_int(j["rank"], "rank", 0, 64);

    const json& tor = j["torsion"];
    if (!tor.is_object()) fail("torsion", "must be an object");
    if (tor.contains("invariants") == tor.contains("table")) {
        fail("torsion", "must have exactly one of 'invariants' or 'table'");
    }
    if (tor.contains("invariants")) {
        expect_keys(tor, "torsion", {"invariants"});
        const json& inv = tor["invariants"];
        if (!inv.is_array()) fail("torsion.invariants", "must be an array");
        std::vector<int> factors;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            factors.push_back(get_small_int(inv[i], "torsion.invariants[" + std::to_string(i) + "]",
                                            2, TorsionGroup::kOrderCap));
        }
        doc.invariant_factors = std::move(factors);
    } else {
        expect_keys(tor, "torsion", {"table"});
        const json& tab = tor["table"];
        if (!tab.is_array()) fail("torsion.table", "must be an array of rows");
        std::vector<std::vector<int>> rows;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            const std::string row_field = "torsion.table[" + std::to_string(i) + "]";
            if (!tab[i].is_array()) fail(row_field, "must be an array");
            std::vector<int> row;
            for (std::size_t c = 0; c < tab[i].size(); ++c) {
                row.push_back(get_small_int(tab[i][c], row_field + "[" + std::to_string(c) + "]",
                                            0, TorsionGroup::kOrderCap - 1));
            }
            rows.push_back(std::move(row));
        }
        if (rows.empty()) fail("torsion.table", "must be non-empty");
        doc.table = std::move(rows);
    }

    // The document pins down the torsion order, so generator indices can be
    // range-checked right here instead of waiting for realize().
    long long torsion_order = 1;
    if (doc.invariant_factors) {
        for (int f : *doc.invariant_factors) {
            torsion_order = std::min<long long>(torsion_order * f, TorsionGroup::kOrderCap + 1LL);
        }
    } else {
        torsion_order = static_cast<long long>(doc.table->size());
    }

    const json& kind = j["kind"];
    if (!kind.is_string()) fail("kind", "must be a string");
    if (kind == "symmetric") {
        doc.kind = SetKind::Symmetric;
    } else if (kind == "monoid") {
        doc.kind = SetKind::Monoid;
    } else {
        fail("kind", "must be \"symmetric\" or \"monoid\"");
    }

    const json& gens = j["generators"];
    if (!gens.is_array() || gens.empty()) fail("generators", "must be a non-empty array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string g_field = "generators[" + std::to_string(i) + "]";
        const json& g = gens[i];
        if (!g.is_object()) fail(g_field, "must be an object");
        expect_keys(g, g_field, {"tor", "vec"});
        GroupElement elem;
        elem.tor = get_small_int(g["tor"], g_field + ".tor", 0,
                                 static_cast<int>(torsion_order) - 1);
        const json& vec = g["vec"];
        if (!vec.is_array()) fail(g_field + ".vec", "must be an array");
        if (static_cast<int>(vec.size()) != doc.rank) {
            fail(g_field + ".vec", "length " + std::to_string(vec.size()) +
                                       " does not match rank " + std::to_string(doc.rank));
        }
        for (std::size_t c = 0; c < vec.size(); ++c) {
            elem.vec.push_back(
                get_integer(vec[c], g_field + ".vec[" + std::to_string(c) + "]"));
        }
        doc.generators.push_back(std::move(elem));
    }
    return doc;
}

ParsedGroupDocument load_group_document(const std::string& path) {
    try {
        return parse_group_document(read_file(path));
    } catch (const IngestError& e) {
        throw IngestError(path + ": " + e.what());
    }
}

std::string serialize_group_document(const ParsedGroupDocument& doc) {
    json j;
    j["rank"] = doc.rank;
    j["torsion"] = torsion_to_json(doc);
    j["kind"] = doc.kind == SetKind::Symmetric ? "symmetric" : "monoid";
    json gens = json::array();
    for (const GroupElement& g : doc.generators) {
        json e;
        e["tor"] = g.tor;
        e["vec"] = g.vec;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    return canonical_dump(j);
}

GeneratingSet realize(const ParsedGroupDocument& doc, const GeneratingSet::Options& options) {
    return GeneratingSet::create(doc.make_spec(), doc.generators, doc.kind, options);
}

ParsedGroupDocument document_from_set(const GeneratingSet& set) {
    ParsedGroupDocument doc;
    doc.rank = set.group().rank();
    const TorsionGroup& tor = set.group().torsion();
    if (tor.order() == 1) {
        doc.invariant_factors = std::vector<int>{};
    } else if (!tor.invariant_factors().empty()) {
        doc.invariant_factors = tor.invariant_factors();
    } else {
        doc.table = tor.table();
    }
    doc.generators = set.elements();
    doc.kind = set.kind();
    return doc;
}

std::string spec_content_hash(const ParsedGroupDocument& doc) {
    const std::string bytes = serialize_group_document(doc);
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string series_to_csv(const GrowthSeries& series) {
    std::ostringstream os;
    os << "r,sigma,beta\n";
    for (int r = 0; r <= series.max_radius(); ++r) {
        os << r << ',' << series.sigma_at(r) << ',' << series.beta_at(r) << '\n';
    }
    return os.str();
}

std::string series_to_json(const GrowthSeries& series, const ParsedGroupDocument& doc) {
    json j;
    j["group"] = json::parse(serialize_group_document(doc));
    j["spec_hash"] = spec_content_hash(doc);
    json s;
    s["provenance"] = std::string(to_string(series.provenance()));
    s["radius"] = series.max_radius();
    json sigma = json::array(), beta = json::array();
    for (int r = 0; r <= series.max_radius(); ++r) {
        sigma.push_back(series.sigma_at(r).str());
        beta.push_back(series.beta_at(r).str());
    }
    s["sigma"] = std::move(sigma);
    s["beta"] = std::move(beta);
    j["series"] = std::move(s);
    return canonical_dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IngestError("cannot read " + path);
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("cannot write " + path);
}

} // namespace abelgrowth
