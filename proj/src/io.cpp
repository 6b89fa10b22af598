#include "blz/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace blz {

namespace {

constexpr uint32_t kTokensPerLine = 16;

// Splits text into lines and hands out whitespace-separated fields with
// line numbers for error reporting.
struct LineReader {
  std::vector<std::string> lines;
  size_t next = 0;

  explicit LineReader(std::string_view text) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        if (start < text.size()) lines.emplace_back(text.substr(start));
        break;
      }
      lines.emplace_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }

  bool done() {
    while (next < lines.size() && blank(lines[next])) next++;
    return next >= lines.size();
  }

  // Fields of the next non-blank line, plus its 1-based number.
  std::pair<std::vector<std::string>, size_t> take() {
    if (done()) throw FormatError("unexpected end of file");
    size_t no = next + 1;
    std::istringstream in(lines[next++]);
    std::vector<std::string> fields;
    std::string f;
    while (in >> f) fields.push_back(f);
    return {fields, no};
  }

  static bool blank(const std::string& l) {
    return l.find_first_not_of(" \t\r") == std::string::npos;
  }
};

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw FormatError("line " + std::to_string(line) + ": " + msg);
}

uint64_t parse_num(const std::string& field, size_t line, uint64_t max) {
  uint64_t value = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || p != field.data() + field.size())
    fail(line, "expected a number, got '" + field + "'");
  if (value > max) fail(line, "value " + field + " is too large");
  return value;
}

// Shared "alphabet"/"sym" header of token-bearing formats.
SymbolTable read_table(LineReader& in) {
  auto [head, hline] = in.take();
  if (head.size() != 2 || head[0] != "alphabet")
    fail(hline, "expected 'alphabet <count>'");
  uint32_t sigma = static_cast<uint32_t>(parse_num(head[1], hline, UINT32_MAX));
  SymbolTable table;
  for (uint32_t id = 0; id < sigma; id++) {
    auto [f, line] = in.take();
    if (f.size() != 3 || f[0] != "sym") fail(line, "expected 'sym <id> <name>'");
    if (parse_num(f[1], line, UINT32_MAX) != id)
      fail(line, "symbol ids must run 0.." + std::to_string(sigma - 1) +
                     " in order; got " + f[1]);
    if (table.find(f[2]))
      fail(line, "duplicate symbol name '" + f[2] + "'");
    table.intern(f[2]);
  }
  return table;
}

void write_table(std::string& out, const SymbolTable& table) {
  out += "alphabet " + std::to_string(table.size()) + "\n";
  for (uint32_t id = 0; id < table.size(); id++)
    out += "sym " + std::to_string(id) + " " + table.name(id) + "\n";
}

}  // namespace

// ---------------------------------------------------------------------------
// Token stream files

std::string write_string_file(const SymbolString& s) {
  std::string out;
  write_table(out, s.table);
  for (uint32_t i = 0; i < s.length(); i++) {
    out += s.table.name(s.syms[i]);
    out += (i % kTokensPerLine == kTokensPerLine - 1 || i + 1 == s.length())
               ? '\n'
               : ' ';
  }
  return out;
}

SymbolString read_string_file(std::string_view text) {
  LineReader in(text);
  SymbolString s;
  s.table = read_table(in);
  while (!in.done()) {
    auto [fields, line] = in.take();
    for (const std::string& tok : fields) {
      auto id = s.table.find(tok);
      if (!id) fail(line, "unknown token '" + tok + "'");
      s.syms.push_back(*id);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing files

std::string write_parsing_file(const Parsing& p) {
  std::string out;
  for (const Phrase& ph : p.phrases) {
    out += "phrase " + std::to_string(ph.start) + " " + std::to_string(ph.end) +
           " " + (ph.is_literal() ? "-" : std::to_string(*ph.source)) + "\n";
  }
  return out;
}

Parsing read_parsing_file(std::string_view text) {
  LineReader in(text);
  Parsing p;
  uint32_t expect_start = 1;
  while (!in.done()) {
    auto [f, line] = in.take();
    if (f.size() != 4 || f[0] != "phrase")
      fail(line, "expected 'phrase <start> <end> <source>'");
    uint32_t start = static_cast<uint32_t>(parse_num(f[1], line, UINT32_MAX));
    uint32_t end = static_cast<uint32_t>(parse_num(f[2], line, UINT32_MAX));
    if (start != expect_start)
      fail(line, "phrase starts at " + f[1] + ", expected " +
                     std::to_string(expect_start));
    if (end < start) fail(line, "phrase end " + f[2] + " before its start");
    if (f[3] == "-") {
      if (end != start) fail(line, "literal phrases have length 1");
      p.phrases.push_back(Phrase::literal(start));
    } else {
      uint32_t src = static_cast<uint32_t>(parse_num(f[3], line, UINT32_MAX));
      if (src < 1 || src >= start)
        fail(line, "source " + f[3] + " must lie strictly before the phrase");
      p.phrases.push_back(Phrase::copy(start, end, src));
    }
    expect_start = end + 1;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Triple files

std::string write_triples_file(const TripleSeq& t) {
  std::string out;
  write_table(out, t.table);
  for (const EncodedTriple& tr : t.triples)
    out += "triple " + std::to_string(tr.offset) + " " +
           std::to_string(tr.length) + " " + t.table.name(tr.literal) + "\n";
  return out;
}

TripleSeq read_triples_file(std::string_view text) {
  LineReader in(text);
  TripleSeq t;
  t.table = read_table(in);
  while (!in.done()) {
    auto [f, line] = in.take();
    if (f.size() != 4 || f[0] != "triple")
      fail(line, "expected 'triple <offset> <length> <literal>'");
    EncodedTriple tr;
    tr.offset = static_cast<uint32_t>(parse_num(f[1], line, UINT32_MAX));
    tr.length = static_cast<uint32_t>(parse_num(f[2], line, UINT32_MAX));
    if ((tr.offset == 0) != (tr.length == 0))
      fail(line, "offset and length must be zero together (literal) or both "
                 "positive (copy)");
    auto id = t.table.find(f[3]);
    if (!id) fail(line, "unknown literal '" + f[3] + "'");
    tr.literal = *id;
    t.triples.push_back(tr);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Graph files

std::string write_graph_file(const Graph& g) {
  std::string out =
      std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges)
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  return out;
}

Graph read_graph_file(std::string_view text) {
  LineReader in(text);
  auto [head, hline] = in.take();
  if (head.size() != 2) fail(hline, "expected '<n> <m>'");
  Graph g;
  g.n = static_cast<uint32_t>(parse_num(head[0], hline, UINT32_MAX));
  uint32_t m = static_cast<uint32_t>(parse_num(head[1], hline, UINT32_MAX));
  for (uint32_t j = 0; j < m; j++) {
    auto [f, line] = in.take();
    if (f.size() != 2) fail(line, "expected '<u> <v>'");
    g.edges.emplace_back(
        static_cast<uint32_t>(parse_num(f[0], line, UINT32_MAX)),
        static_cast<uint32_t>(parse_num(f[1], line, UINT32_MAX)));
  }
  if (!in.done()) {
    auto [extra, line] = in.take();
    (void)extra;
    fail(line, "trailing content after the declared edges");
  }
  try {
    g.validate();
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
  return g;
}

// ---------------------------------------------------------------------------
// Instances

std::string write_segments_file(const ReductionInstance& inst) {
  const Graph& g = inst.graph;
  std::string out = "graph " + std::to_string(g.n) + " " +
                    std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges)
    out += "edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
           "\n";
  out += "params " + std::to_string(inst.params.c) + " " +
         std::to_string(inst.params.ell) + "\n";

  auto line = [&out](const std::string& kind, uint32_t index, Segment s) {
    out += kind + " " + std::to_string(index) + " " + std::to_string(s.start) +
           " " + std::to_string(s.end) + "\n";
  };
  const SegmentIndex& seg = inst.segments;
  line("P", 1, seg.P);
  for (uint32_t i = 0; i < seg.X.size(); i++) line("X", i + 1, seg.X[i]);
  for (uint32_t j = 0; j < seg.Y.size(); j++) line("Y", j + 1, seg.Y[j]);
  for (uint32_t i = 0; i < seg.alpha.size(); i++)
    line("alpha", i + 1, seg.alpha[i]);
  for (uint32_t i = 0; i < seg.beta.size(); i++) line("beta", i + 1, seg.beta[i]);
  for (uint32_t lvl = 0; lvl < seg.copies.size(); lvl++)
    for (uint32_t gamma = 0; gamma < seg.copies[lvl].size(); gamma++)
      line("alpha" + std::to_string(lvl + 1) + "copy", gamma + 1,
           seg.copies[lvl][gamma]);
  return out;
}

ReductionInstance read_instance(std::string_view tokens_text,
                                std::string_view segments_text) {
  LineReader in(segments_text);
  auto [head, hline] = in.take();
  if (head.size() != 3 || head[0] != "graph")
    fail(hline, "expected 'graph <n> <m>'");
  Graph g;
  g.n = static_cast<uint32_t>(parse_num(head[1], hline, UINT32_MAX));
  uint32_t m = static_cast<uint32_t>(parse_num(head[2], hline, UINT32_MAX));
  for (uint32_t j = 0; j < m; j++) {
    auto [f, line] = in.take();
    if (f.size() != 3 || f[0] != "edge") fail(line, "expected 'edge <u> <v>'");
    g.edges.emplace_back(
        static_cast<uint32_t>(parse_num(f[1], line, UINT32_MAX)),
        static_cast<uint32_t>(parse_num(f[2], line, UINT32_MAX)));
  }
  auto [pf, pline] = in.take();
  if (pf.size() != 3 || pf[0] != "params")
    fail(pline, "expected 'params <c> <ell>'");
  ReductionParams params;
  params.c = static_cast<uint32_t>(parse_num(pf[1], pline, UINT32_MAX));
  params.ell = static_cast<uint32_t>(parse_num(pf[2], pline, UINT32_MAX));

  // The declared graph and parameters determine the rebuilt length exactly,
  // so compare lengths arithmetically before materializing anything: a
  // disagreement is a format error, not a reason to allocate gigabytes.
  SymbolString toks = read_string_file(tokens_text);
  constexpr uint64_t kLengthCap = 1ull << 40;
  uint64_t predicted = 5ull * g.n + 11ull * g.m();
  for (uint32_t lvl = 2; lvl <= params.c; ++lvl) {
    if (predicted > kLengthCap / (uint64_t{params.ell} + 1)) {
      predicted = kLengthCap + 1;
      break;
    }
    predicted = (uint64_t{params.ell} + 1) * predicted + params.ell;
  }
  if (predicted != toks.length())
    throw FormatError(
        "token stream does not match the instance rebuilt from the segment "
        "file's graph and parameters");

  ReductionInstance inst;
  try {
    inst = build_reduction(g, params);
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
  if (write_segments_file(inst) != segments_text)
    throw FormatError(
        "segment lines do not match the instance rebuilt from the declared "
        "graph and parameters");
  if (write_string_file(inst.text) != tokens_text)
    throw FormatError(
        "token stream does not match the instance rebuilt from the segment "
        "file's graph and parameters");
  return inst;
}

// ---------------------------------------------------------------------------
// Files

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void save_file(const std::string& path, std::string_view data) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("cannot write " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move " + tmp + " into place: " + ec.message());
  }
}

}  // namespace blz
