#pragma once

// Core model: symbol strings over explicit alphabets, LZ parsings whose
// phrases are either a single literal or a copy of earlier text plus one
// trailing literal, hop numbers (how many copy indirections a position sits
// behind), and the triple encoding used for bounded random access.
//
// All positions are 1-based throughout the public interface; internal
// storage is 0-based.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blz {

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file/stream content (bad header, bad line, unknown token...).
struct FormatError : Error {
  using Error::Error;
};

// Filesystem failure (open/read/write).
struct IoError : Error {
  using Error::Error;
};

// An operation that requires a valid parsing was handed an invalid one.
struct InvalidParsingError : Error {
  using Error::Error;
};

// A domain precondition does not hold (not a vertex cover, ell <= k,
// input not square-free, instance too large for an exhaustive oracle...).
struct PreconditionError : Error {
  using Error::Error;
};

// Position or index out of range.
struct RangeError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Symbols and strings

// Dense id <-> display-name mapping. Ids are assigned 0..size()-1 in
// interning order. Names must be nonempty and free of whitespace (tokens
// are whitespace-separated on disk).
class SymbolTable {
 public:
  // Returns the id of `name`, interning it if new. Throws FormatError on an
  // illegal name.
  uint32_t intern(std::string_view name);

  std::optional<uint32_t> find(std::string_view name) const;
  const std::string& name(uint32_t id) const;  // throws RangeError
  uint32_t size() const { return static_cast<uint32_t>(names_.size()); }

  bool operator==(const SymbolTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, uint32_t> ids_;
};

// A finite sequence of symbols together with its alphabet.
struct SymbolString {
  SymbolTable table;
  std::vector<uint32_t> syms;  // syms[0] is position 1

  uint32_t length() const { return static_cast<uint32_t>(syms.size()); }

  // 1-based accessors.
  uint32_t at(uint32_t pos) const;             // symbol id; throws RangeError
  const std::string& token(uint32_t pos) const;

  // Builds a string from whitespace-separated tokens; ids are assigned in
  // first-appearance order.
  static SymbolString from_text(std::string_view text);
  // Builds a string treating every byte as one single-character token.
  static SymbolString from_chars(std::string_view chars);

  // Renders the string as space-separated tokens (diagnostics).
  std::string to_text() const;

  bool operator==(const SymbolString& o) const {
    return table == o.table && syms == o.syms;
  }
  // Pointwise token equality, ignoring how the alphabets are numbered.
  bool same_content(const SymbolString& o) const;
};

// ---------------------------------------------------------------------------
// Parsings

// One phrase of a parsing: positions [start, end] of the parsed string.
// A literal phrase has no source and end == start. A copy phrase copies
// s[source .. source + (end-start) - 1] elementwise and appends s[end] as a
// fresh literal; `source` must start strictly before `start`. The copied
// region may overlap the phrase itself, in which case the elementwise rule
// makes the phrase body a power of the unit s[source .. start-1].
struct Phrase {
  uint32_t start = 0;
  uint32_t end = 0;
  std::optional<uint32_t> source;

  bool is_literal() const { return !source.has_value(); }
  uint32_t length() const { return end - start + 1; }

  static Phrase literal(uint32_t pos) { return {pos, pos, std::nullopt}; }
  static Phrase copy(uint32_t start, uint32_t end, uint32_t source) {
    return {start, end, source};
  }

  bool operator==(const Phrase&) const = default;
};

struct Parsing {
  std::vector<Phrase> phrases;

  uint32_t size() const { return static_cast<uint32_t>(phrases.size()); }
  bool operator==(const Parsing&) const = default;
};

// A parsing of [1, n] into n literal phrases.
Parsing all_singletons(uint32_t n);

// For an interior position `pos` of copy phrase `p` (start <= pos < end),
// the position its character is copied from:
//   source_of(p, pos) = p.source + ((pos - p.start) mod (p.start - p.source))
// The modulus is the length of the unit s[source .. start-1], so overlapping
// copies resolve directly into that unit. Always < p.start.
uint32_t source_of(const Phrase& p, uint32_t pos);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  uint32_t phrase = 0;  // 1-based ordinal of the offending phrase (0 = global)
  std::string reason;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks that `p` is a valid parsing of `s`: the phrases tile [1, length]
// in order, every copy phrase has length >= 2 and a source starting strictly
// before the phrase, and the copied body matches elementwise (which for
// self-overlapping sources is exactly the power-of-unit rule). Never throws;
// all problems are reported.
ValidationReport validate_parsing(const SymbolString& s, const Parsing& p);

// Throws InvalidParsingError with the first violation if the report is bad.
void require_valid(const SymbolString& s, const Parsing& p);

// ---------------------------------------------------------------------------
// Hops

struct HopProfile {
  std::vector<uint32_t> hops;  // hops[0] is position 1
  uint32_t hop_max = 0;

  uint32_t at(uint32_t pos) const;  // 1-based; throws RangeError
};

// hop(pos) = 0 when pos ends a phrase (every literal, and the final
// character of every copy phrase); otherwise hop(pos) = hop(source_of) + 1.
// Requires a valid parsing (throws InvalidParsingError otherwise).
HopProfile compute_hops(const SymbolString& s, const Parsing& p);

// ---------------------------------------------------------------------------
// Triple encoding and bounded access

// (0, 0, literal) encodes a literal phrase; (offset, length, literal) with
// length >= 1 encodes a copy phrase: copy `length` symbols starting at
// 1-based `offset`, then append `literal`.
struct EncodedTriple {
  uint32_t offset = 0;
  uint32_t length = 0;
  uint32_t literal = 0;

  bool operator==(const EncodedTriple&) const = default;
};

struct TripleSeq {
  SymbolTable table;
  std::vector<EncodedTriple> triples;

  // Total length of the decoded string.
  uint64_t decoded_length() const;
};

// Requires a valid parsing.
TripleSeq encode(const SymbolString& s, const Parsing& p);

// Reconstructs the string. Throws FormatError on a malformed stream
// (offset outside the already-decoded prefix, copy with offset 0, ...).
SymbolString decode(const TripleSeq& t);

struct AccessResult {
  uint32_t symbol = 0;    // symbol id in t.table
  uint32_t accesses = 0;  // number of triples read; equals hop(pos) + 1
};

// Random access to position `pos` using the encoding alone: follows sources
// until a phrase-final literal is hit. Throws RangeError if pos is outside
// [1, decoded_length()].
AccessResult access_char(const TripleSeq& t, uint32_t pos);

}  // namespace blz
