#pragma once

// Text file formats. All readers give 1-based line numbers in errors and
// writers emit a canonical form that re-reading reproduces byte-for-byte.
//
//   token stream   "alphabet <sigma>", then one "sym <id> <name>" line per
//                  symbol in id order, then the whitespace-separated body
//                  tokens (16 per line).
//   parsing        one "phrase <start> <end> <source>" line per phrase,
//                  "-" as the source of a literal; lines tile [1, n].
//   triples        "alphabet"/"sym" header as above, then one
//                  "triple <offset> <length> <literal>" line per phrase.
//   graph          "<n> <m>", then one "<u> <v>" line per edge, 1-based.
//   segment index  "graph <n> <m>", the edge lines, "params <c> <ell>",
//                  then one "<kind> <index> <start> <end>" line per segment
//                  (kinds P, X, Y, alpha, beta, alpha<level>copy).
//
// The in-memory halves live in core.hpp / reduction.hpp; this header only
// adds the serialization boundary plus small file helpers.

#include <string>
#include <string_view>

#include "blz/core.hpp"
#include "blz/reduction.hpp"

namespace blz {

std::string write_string_file(const SymbolString& s);
SymbolString read_string_file(std::string_view text);  // FormatError

std::string write_parsing_file(const Parsing& p);
Parsing read_parsing_file(std::string_view text);

std::string write_triples_file(const TripleSeq& t);
TripleSeq read_triples_file(std::string_view text);

std::string write_graph_file(const Graph& g);
Graph read_graph_file(std::string_view text);

// The segment-index sidecar carries the graph and parameters, so the pair of
// files is self-contained.
std::string write_segments_file(const ReductionInstance& inst);

// Rebuilds the instance from the sidecar's graph and parameters, then
// requires both files to equal the canonical serialization of the rebuilt
// instance (FormatError otherwise), so a loaded instance is always
// internally consistent.
ReductionInstance read_instance(std::string_view tokens_text,
                                std::string_view segments_text);

// Whole-file helpers. Saving writes a sibling temp file and renames it into
// place, so a failed save never leaves a partial file behind.
std::string load_file(const std::string& path);                 // IoError
void save_file(const std::string& path, std::string_view data); // IoError

}  // namespace blz
