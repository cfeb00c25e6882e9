#pragma once

#include "abelgrowth/generating_set.hpp"
#include "abelgrowth/group.hpp"
#include "abelgrowth/growth_series.hpp"
#include "abelgrowth/torsion_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelgrowth {

// A group-spec document as exchanged with the outside world:
//
//   {
//     "generators": [{"tor": 0, "vec": [1]}, ...],
//     "kind": "symmetric" | "monoid",
//     "rank": 1,
//     "torsion": {"invariants": [2, 4]} | {"table": [[0,1],[1,0]]}
//   }
//
// Serialization is canonical (sorted keys, two-space indent, trailing
// newline), so parse followed by serialize reproduces the input bytes for any
// document we emitted ourselves. The struct keeps the torsion description as
// given rather than the realized group, precisely to make that round trip
// exact.
struct ParsedGroupDocument {
    int rank = 0;
    std::optional<std::vector<int>> invariant_factors; // [] means trivial torsion
    std::optional<std::vector<std::vector<int>>> table;
    std::vector<GroupElement> generators;
    SetKind kind = SetKind::Symmetric;

    TorsionGroup make_torsion() const;
    GroupSpec make_spec() const;
};

// Both throw IngestError with a line/field diagnostic on malformed input.
ParsedGroupDocument parse_group_document(const std::string& text);
ParsedGroupDocument load_group_document(const std::string& path);

std::string serialize_group_document(const ParsedGroupDocument& doc);

// Runs the full generation check on the document's set. ValidationError and
// GenerationError pass through; they mean the document was well-formed but
// describes a bad set.
GeneratingSet realize(const ParsedGroupDocument& doc, const GeneratingSet::Options& options = {});

ParsedGroupDocument document_from_set(const GeneratingSet& set);

// FNV-1a over the canonical serialization, as "fnv1a64:<16 hex digits>".
// Pairs a cached series with the exact spec that produced it.
std::string spec_content_hash(const ParsedGroupDocument& doc);

// "r,sigma,beta" header plus one exact decimal row per radius.
std::string series_to_csv(const GrowthSeries& series);

// Series plus the originating document and its content hash. Counts are
// decimal strings since they outgrow any fixed-width JSON number.
std::string series_to_json(const GrowthSeries& series, const ParsedGroupDocument& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace abelgrowth
