#include "blz/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace blz {

// ---------------------------------------------------------------------------
// SymbolTable

uint32_t SymbolTable::intern(std::string_view name) {
  if (name.empty()) throw FormatError("symbol name must be nonempty");
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      throw FormatError("symbol name contains whitespace: '" +
                        std::string(name) + "'");
  }
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<uint32_t> SymbolTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& SymbolTable::name(uint32_t id) const {
  if (id >= names_.size())
    throw RangeError("symbol id " + std::to_string(id) + " out of range");
  return names_[id];
}

// ---------------------------------------------------------------------------
// SymbolString

uint32_t SymbolString::at(uint32_t pos) const {
  if (pos < 1 || pos > length())
    throw RangeError("position " + std::to_string(pos) +
                     " out of range [1, " + std::to_string(length()) + "]");
  return syms[pos - 1];
}

const std::string& SymbolString::token(uint32_t pos) const {
  return table.name(at(pos));
}

SymbolString SymbolString::from_text(std::string_view text) {
  SymbolString s;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) s.syms.push_back(s.table.intern(tok));
  return s;
}

SymbolString SymbolString::from_chars(std::string_view chars) {
  SymbolString s;
  for (char ch : chars) s.syms.push_back(s.table.intern(std::string_view(&ch, 1)));
  return s;
}

std::string SymbolString::to_text() const {
  std::string out;
  for (uint32_t i = 0; i < length(); i++) {
    if (i) out += ' ';
    out += table.name(syms[i]);
  }
  return out;
}

bool SymbolString::same_content(const SymbolString& o) const {
  if (length() != o.length()) return false;
  for (uint32_t i = 0; i < length(); i++)
    if (table.name(syms[i]) != o.table.name(o.syms[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Phrases

Parsing all_singletons(uint32_t n) {
  Parsing p;
  p.phrases.reserve(n);
  for (uint32_t pos = 1; pos <= n; pos++) p.phrases.push_back(Phrase::literal(pos));
  return p;
}

uint32_t source_of(const Phrase& p, uint32_t pos) {
  if (p.is_literal() || pos < p.start || pos >= p.end)
    throw RangeError("source_of: position " + std::to_string(pos) +
                     " is not interior to a copy phrase");
  uint32_t unit = p.start - *p.source;  // length of s[source .. start-1]
  return *p.source + (pos - p.start) % unit;
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    if (v.phrase) out += "phrase " + std::to_string(v.phrase) + ": ";
    out += v.reason;
  }
  return out;
}

ValidationReport validate_parsing(const SymbolString& s, const Parsing& p) {
  ValidationReport rep;
  auto flag = [&rep](uint32_t phrase, std::string reason) {
    rep.violations.push_back({phrase, std::move(reason)});
  };

  uint32_t n = s.length();
  uint32_t expect_start = 1;
  for (uint32_t i = 0; i < p.size(); i++) {
    const Phrase& ph = p.phrases[i];
    uint32_t ord = i + 1;
    if (ph.start != expect_start) {
      flag(ord, "starts at " + std::to_string(ph.start) + ", expected " +
                    std::to_string(expect_start));
      return rep;  // positions are unreliable from here on
    }
    if (ph.end < ph.start || ph.end > n) {
      flag(ord, "ends at " + std::to_string(ph.end) + ", outside [" +
                    std::to_string(ph.start) + ", " + std::to_string(n) + "]");
      return rep;
    }
    if (ph.is_literal()) {
      if (ph.end != ph.start)
        flag(ord, "literal phrase must have length 1");
    } else {
      uint32_t src = *ph.source;
      if (ph.end == ph.start) {
        flag(ord, "copy phrase must have length >= 2");
      } else if (src < 1 || src >= ph.start) {
        flag(ord, "source " + std::to_string(src) +
                      " must start strictly before the phrase");
      } else {
        // Elementwise match of the copied body; with an overlapping source
        // this is exactly the power-of-unit condition.
        uint32_t body = ph.length() - 1;
        for (uint32_t k = 0; k < body; k++) {
          if (s.syms[src - 1 + k] != s.syms[ph.start - 1 + k]) {
            flag(ord, "copied body mismatch at offset " + std::to_string(k) +
                          ": source has '" + s.table.name(s.syms[src - 1 + k]) +
                          "', phrase has '" +
                          s.table.name(s.syms[ph.start - 1 + k]) + "'");
            break;
          }
        }
      }
    }
    expect_start = ph.end + 1;
  }
  if (expect_start != n + 1)
    flag(0, "phrases cover [1, " + std::to_string(expect_start - 1) +
                "] but the string has length " + std::to_string(n));
  return rep;
}

void require_valid(const SymbolString& s, const Parsing& p) {
  ValidationReport rep = validate_parsing(s, p);
  if (!rep.ok()) throw InvalidParsingError("invalid parsing: " + rep.to_string());
}

// ---------------------------------------------------------------------------
// Hops

uint32_t HopProfile::at(uint32_t pos) const {
  if (pos < 1 || pos > hops.size())
    throw RangeError("position " + std::to_string(pos) + " out of range [1, " +
                     std::to_string(hops.size()) + "]");
  return hops[pos - 1];
}

HopProfile compute_hops(const SymbolString& s, const Parsing& p) {
  require_valid(s, p);
  HopProfile hp;
  hp.hops.assign(s.length(), 0);
  // Sources always point strictly backwards, so one left-to-right pass over
  // the phrases settles every position.
  for (const Phrase& ph : p.phrases) {
    for (uint32_t pos = ph.start; pos < ph.end; pos++)
      hp.hops[pos - 1] = hp.hops[source_of(ph, pos) - 1] + 1;
    hp.hops[ph.end - 1] = 0;
  }
  for (uint32_t h : hp.hops) hp.hop_max = std::max(hp.hop_max, h);
  return hp;
}

// ---------------------------------------------------------------------------
// Triple encoding

uint64_t TripleSeq::decoded_length() const {
  uint64_t n = 0;
  for (const auto& t : triples) n += static_cast<uint64_t>(t.length) + 1;
  return n;
}

TripleSeq encode(const SymbolString& s, const Parsing& p) {
  require_valid(s, p);
  TripleSeq out;
  out.table = s.table;
  out.triples.reserve(p.size());
  for (const Phrase& ph : p.phrases) {
    if (ph.is_literal())
      out.triples.push_back({0, 0, s.at(ph.start)});
    else
      out.triples.push_back({*ph.source, ph.length() - 1, s.at(ph.end)});
  }
  return out;
}

SymbolString decode(const TripleSeq& t) {
  SymbolString s;
  s.table = t.table;
  for (uint32_t i = 0; i < t.triples.size(); i++) {
    const EncodedTriple& tr = t.triples[i];
    uint32_t cur = static_cast<uint32_t>(s.syms.size());
    if (tr.length == 0) {
      if (tr.offset != 0)
        throw FormatError("triple " + std::to_string(i + 1) +
                          ": literal must have offset 0");
    } else {
      if (tr.offset < 1 || tr.offset > cur)
        throw FormatError("triple " + std::to_string(i + 1) + ": offset " +
                          std::to_string(tr.offset) +
                          " outside the decoded prefix of length " +
                          std::to_string(cur));
      // Symbol-at-a-time copy so self-overlapping sources extend naturally.
      for (uint32_t k = 0; k < tr.length; k++)
        s.syms.push_back(s.syms[tr.offset - 1 + k]);
    }
    if (tr.literal >= t.table.size())
      throw FormatError("triple " + std::to_string(i + 1) +
                        ": literal id out of table range");
    s.syms.push_back(tr.literal);
  }
  return s;
}

AccessResult access_char(const TripleSeq& t, uint32_t pos) {
  uint64_t n = t.decoded_length();
  if (pos < 1 || pos > n)
    throw RangeError("position " + std::to_string(pos) + " out of range [1, " +
                     std::to_string(n) + "]");
  // ends[j] = last position covered by triple j (phrase layout is implied by
  // the lengths alone).
  std::vector<uint64_t> ends(t.triples.size());
  uint64_t acc = 0;
  for (uint32_t j = 0; j < t.triples.size(); j++) {
    acc += static_cast<uint64_t>(t.triples[j].length) + 1;
    ends[j] = acc;
  }

  AccessResult res;
  uint64_t p = pos;
  for (;;) {
    uint32_t j = static_cast<uint32_t>(
        std::lower_bound(ends.begin(), ends.end(), p) - ends.begin());
    const EncodedTriple& tr = t.triples[j];
    uint64_t start = ends[j] - tr.length;
    res.accesses++;
    if (p == ends[j]) {
      res.symbol = tr.literal;
      return res;
    }
    // Interior of a copy phrase: hop to the source, reducing overlapping
    // copies modulo the unit length.
    uint64_t unit = start - tr.offset;
    p = tr.offset + (p - start) % unit;
  }
}

}  // namespace blz
