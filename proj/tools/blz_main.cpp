// Command-line front end. Talks to the library exclusively through the C
// interface in blz.h; all success output is key=value lines on stdout.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or input
// error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blz.h"

namespace {

// Thrown for library and input errors; message lands on stderr.
struct Failure {
  int code;
  std::string msg;
};

void check(int status) {
  if (status != BLZ_OK) throw Failure{2, blz_last_error()};
}

struct StringDel {
  void operator()(blz_string* p) const { blz_string_free(p); }
};
struct ParsingDel {
  void operator()(blz_parsing* p) const { blz_parsing_free(p); }
};
struct TriplesDel {
  void operator()(blz_triples* p) const { blz_triples_free(p); }
};
struct GraphDel {
  void operator()(blz_graph* p) const { blz_graph_free(p); }
};
struct InstanceDel {
  void operator()(blz_instance* p) const { blz_instance_free(p); }
};
using StringPtr = std::unique_ptr<blz_string, StringDel>;
using ParsingPtr = std::unique_ptr<blz_parsing, ParsingDel>;
using TriplesPtr = std::unique_ptr<blz_triples, TriplesDel>;
using GraphPtr = std::unique_ptr<blz_graph, GraphDel>;
using InstancePtr = std::unique_ptr<blz_instance, InstanceDel>;

StringPtr load_string(const std::string& path) {
  blz_string* s = nullptr;
  check(blz_string_load(path.c_str(), &s));
  return StringPtr(s);
}

ParsingPtr load_parsing(const std::string& path) {
  blz_parsing* p = nullptr;
  check(blz_parsing_load(path.c_str(), &p));
  return ParsingPtr(p);
}

GraphPtr load_graph(const std::string& path) {
  blz_graph* g = nullptr;
  check(blz_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

InstancePtr load_instance(const std::string& tokens,
                          const std::string& segments) {
  blz_instance* inst = nullptr;
  check(blz_instance_load(tokens.c_str(), segments.c_str(), &inst));
  return InstancePtr(inst);
}

// Requires the parsing to be valid for s, then reports size and hop ceiling.
uint32_t hop_max_of(const blz_string* s, const blz_parsing* p) {
  uint32_t hop_max = 0;
  check(blz_hops(s, p, nullptr, 0, &hop_max));
  return hop_max;
}

std::vector<uint32_t> parse_vertex_list(const std::string& text) {
  std::vector<uint32_t> vs;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || v == 0 || v > UINT32_MAX) throw Failure{2, ""};
      vs.push_back(static_cast<uint32_t>(v));
    } catch (const Failure&) {
      throw Failure{2, "bad vertex '" + tok + "' in cover list"};
    } catch (const std::exception&) {
      throw Failure{2, "bad vertex '" + tok + "' in cover list"};
    }
  }
  return vs;
}

std::string join(const std::vector<uint32_t>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-access Lempel-Ziv toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(blz_version()));
  int exit_code = 0;

  // ------------------------------------------------------------------ parse
  auto* parse = app.add_subcommand(
      "parse", "Parse a string file (greedy, hop-bounded greedy, or exact)");
  struct {
    std::string in, out, mode = "greedy";
    uint32_t c = 1;
    uint64_t max_nodes = 0;
    double time_limit = 0.0;
    uint32_t upper_bound = 0;
    uint32_t threads = 0;
  } parse_opt;
  parse->add_option("--in", parse_opt.in, "string file")->required();
  parse->add_option("--out", parse_opt.out, "parsing file to write");
  parse->add_option("--mode", parse_opt.mode, "greedy | bounded | exact")
      ->check(CLI::IsMember({"greedy", "bounded", "exact"}));
  parse->add_option("--c", parse_opt.c, "hop ceiling (bounded/exact)");
  parse->add_option("--max-nodes", parse_opt.max_nodes,
                    "exact: search node budget");
  parse->add_option("--time-limit", parse_opt.time_limit,
                    "exact: wall-clock budget in seconds");
  parse->add_option("--upper-bound", parse_opt.upper_bound,
                    "exact: only look for parsings at most this large");
  parse->add_option("--threads", parse_opt.threads, "exact: worker threads")
      ->envname("BLZ_THREADS");
  parse->callback([&] {
    StringPtr s = load_string(parse_opt.in);
    ParsingPtr p;
    if (parse_opt.mode == "greedy") {
      blz_parsing* raw = nullptr;
      check(blz_parse_greedy(s.get(), &raw));
      p.reset(raw);
    } else if (parse_opt.mode == "bounded") {
      blz_parsing* raw = nullptr;
      check(blz_parse_bounded(s.get(), parse_opt.c, &raw));
      p.reset(raw);
    } else {
      blz_budget budget{parse_opt.max_nodes, parse_opt.time_limit,
                        parse_opt.upper_bound, parse_opt.threads};
      blz_solve_stats stats{};
      blz_parsing* raw = nullptr;
      check(blz_parse_exact(s.get(), parse_opt.c, &budget, &raw, &stats));
      p.reset(raw);
      std::cout << "proven_optimal=" << stats.proven_optimal << "\n"
                << "nodes=" << stats.nodes << "\n";
    }
    uint32_t size = 0;
    check(blz_parsing_size(p.get(), &size));
    std::cout << "size=" << size << "\n"
              << "hop_max=" << hop_max_of(s.get(), p.get()) << "\n";
    if (!parse_opt.out.empty())
      check(blz_parsing_save(p.get(), parse_opt.out.c_str()));
  });

  // ------------------------------------------------------------------- hops
  auto* hops = app.add_subcommand("hops", "Hop numbers of a parsing");
  struct {
    std::string in, parsing;
  } hops_opt;
  hops->add_option("--in", hops_opt.in, "string file")->required();
  hops->add_option("--parsing", hops_opt.parsing, "parsing file")->required();
  hops->callback([&] {
    StringPtr s = load_string(hops_opt.in);
    ParsingPtr p = load_parsing(hops_opt.parsing);
    uint32_t n = 0;
    check(blz_string_length(s.get(), &n));
    std::vector<uint32_t> h(n);
    uint32_t hop_max = 0;
    check(blz_hops(s.get(), p.get(), h.data(), n, &hop_max));
    std::cout << "hop_max=" << hop_max << "\n" << "hops=";
    for (uint32_t i = 0; i < n; ++i) std::cout << (i ? " " : "") << h[i];
    std::cout << "\n";
  });

  // ----------------------------------------------------------------- access
  auto* access = app.add_subcommand(
      "access", "Read one position from a triple stream without decoding");
  struct {
    std::string in;
    uint32_t pos = 0;
  } access_opt;
  access->add_option("--in", access_opt.in, "triple stream file")->required();
  access->add_option("--pos", access_opt.pos, "1-based position")->required();
  access->callback([&] {
    blz_triples* raw = nullptr;
    check(blz_triples_load(access_opt.in.c_str(), &raw));
    TriplesPtr t(raw);
    const char* symbol = nullptr;
    uint32_t accesses = 0;
    check(blz_access(t.get(), access_opt.pos, &symbol, &accesses));
    std::cout << "symbol=" << symbol << "\n"
              << "accesses=" << accesses << "\n";
  });

  // ----------------------------------------------------------------- encode
  auto* encode =
      app.add_subcommand("encode", "Encode a parsing as a triple stream");
  struct {
    std::string in, parsing, out;
  } encode_opt;
  encode->add_option("--in", encode_opt.in, "string file")->required();
  encode->add_option("--parsing", encode_opt.parsing, "parsing file")
      ->required();
  encode->add_option("--out", encode_opt.out, "triple stream file to write")
      ->required();
  encode->callback([&] {
    StringPtr s = load_string(encode_opt.in);
    ParsingPtr p = load_parsing(encode_opt.parsing);
    blz_triples* raw = nullptr;
    check(blz_encode(s.get(), p.get(), &raw));
    TriplesPtr t(raw);
    check(blz_triples_save(t.get(), encode_opt.out.c_str()));
    uint32_t count = 0;
    check(blz_triples_count(t.get(), &count));
    std::cout << "triples=" << count << "\n";
  });

  // ----------------------------------------------------------------- decode
  auto* decode =
      app.add_subcommand("decode", "Decode a triple stream back to a string");
  struct {
    std::string in, out;
  } decode_opt;
  decode->add_option("--in", decode_opt.in, "triple stream file")->required();
  decode->add_option("--out", decode_opt.out, "string file to write")
      ->required();
  decode->callback([&] {
    blz_triples* traw = nullptr;
    check(blz_triples_load(decode_opt.in.c_str(), &traw));
    TriplesPtr t(traw);
    blz_string* sraw = nullptr;
    check(blz_decode(t.get(), &sraw));
    StringPtr s(sraw);
    check(blz_string_save(s.get(), decode_opt.out.c_str()));
    uint32_t n = 0;
    check(blz_string_length(s.get(), &n));
    std::cout << "length=" << n << "\n";
  });

  // ----------------------------------------------------------------- reduce
  auto* reduce = app.add_subcommand(
      "reduce", "Build the cover-to-parsing reduction text for a graph");
  struct {
    std::string graph, out_tokens, out_segments;
    uint32_t c = 1, ell = 1, k = 0;
    bool have_k = false;
  } reduce_opt;
  reduce->add_option("--graph", reduce_opt.graph, "graph file")->required();
  reduce->add_option("--c", reduce_opt.c, "hop ceiling (>= 1)");
  auto* ellopt = reduce->add_option(
      "--ell", reduce_opt.ell,
      "copies per level (>= 1; default: the graph's vertex count)");
  reduce->add_option("--out-tokens", reduce_opt.out_tokens,
                     "string file to write")
      ->required();
  reduce->add_option("--out-segments", reduce_opt.out_segments,
                     "segment-index sidecar to write")
      ->required();
  auto* kopt = reduce->add_option(
      "--k", reduce_opt.k, "cover size to print the parsing-size target for");
  reduce->callback([&] {
    reduce_opt.have_k = kopt->count() > 0;
    GraphPtr g = load_graph(reduce_opt.graph);
    if (ellopt->count() == 0) {
      uint32_t n = 0, m = 0;
      check(blz_graph_counts(g.get(), &n, &m));
      reduce_opt.ell = n > 0 ? n : 1;
    }
    blz_instance* raw = nullptr;
    check(blz_reduce(g.get(), reduce_opt.c, reduce_opt.ell, &raw));
    InstancePtr inst(raw);
    check(blz_instance_save(inst.get(), reduce_opt.out_tokens.c_str(),
                            reduce_opt.out_segments.c_str()));
    const blz_string* text = nullptr;
    check(blz_instance_text(inst.get(), &text));
    uint32_t n = 0, sigma = 0;
    check(blz_string_length(text, &n));
    check(blz_string_sigma(text, &sigma));
    std::cout << "length=" << n << "\n" << "sigma=" << sigma << "\n";
    if (reduce_opt.have_k) {
      uint64_t target = 0;
      check(blz_target_size(g.get(), reduce_opt.k, reduce_opt.c,
                            reduce_opt.ell, &target));
      std::cout << "target=" << target << "\n";
    }
  });

  // ---------------------------------------------------------------- witness
  auto* witness = app.add_subcommand(
      "witness", "Build the parsing a vertex cover certifies");
  struct {
    std::string tokens, segments, cover, out;
  } witness_opt;
  witness->add_option("--tokens", witness_opt.tokens, "instance string file")
      ->required();
  witness->add_option("--segments", witness_opt.segments, "segment sidecar")
      ->required();
  witness->add_option("--cover", witness_opt.cover,
                      "comma-separated ascending vertices, e.g. 1,3");
  witness->add_option("--out", witness_opt.out, "parsing file to write");
  witness->callback([&] {
    InstancePtr inst = load_instance(witness_opt.tokens, witness_opt.segments);
    std::vector<uint32_t> cover = parse_vertex_list(witness_opt.cover);
    blz_parsing* raw = nullptr;
    check(blz_witness(inst.get(), cover.data(),
                      static_cast<uint32_t>(cover.size()), &raw));
    ParsingPtr p(raw);
    const blz_string* text = nullptr;
    check(blz_instance_text(inst.get(), &text));
    uint32_t size = 0;
    check(blz_parsing_size(p.get(), &size));
    std::cout << "size=" << size << "\n"
              << "hop_max=" << hop_max_of(text, p.get()) << "\n";
    if (!witness_opt.out.empty())
      check(blz_parsing_save(p.get(), witness_opt.out.c_str()));
  });

  // ---------------------------------------------------------- extract-cover
  auto* extract = app.add_subcommand(
      "extract-cover", "Map a parsing of a reduction text to a vertex cover");
  struct {
    std::string tokens, segments, parsing;
  } extract_opt;
  extract->add_option("--tokens", extract_opt.tokens, "instance string file")
      ->required();
  extract->add_option("--segments", extract_opt.segments, "segment sidecar")
      ->required();
  extract->add_option("--parsing", extract_opt.parsing, "parsing file")
      ->required();
  extract->callback([&] {
    InstancePtr inst = load_instance(extract_opt.tokens, extract_opt.segments);
    ParsingPtr p = load_parsing(extract_opt.parsing);
    const blz_string* text = nullptr;
    check(blz_instance_text(inst.get(), &text));
    uint32_t n = 0;
    check(blz_string_length(text, &n));
    std::vector<uint32_t> buf(n);
    uint32_t size = 0;
    check(blz_extract_cover(inst.get(), p.get(), buf.data(), n, &size));
    buf.resize(size);
    std::cout << "cover=" << join(buf) << "\n" << "cover_size=" << size
              << "\n";
  });

  // --------------------------------------------------------------------- vc
  auto* vc = app.add_subcommand("vc", "Exact minimum vertex cover");
  struct {
    std::string graph;
  } vc_opt;
  vc->add_option("--graph", vc_opt.graph, "graph file")->required();
  vc->callback([&] {
    GraphPtr g = load_graph(vc_opt.graph);
    uint32_t n = 0, m = 0;
    check(blz_graph_counts(g.get(), &n, &m));
    std::vector<uint32_t> buf(n);
    uint32_t size = 0;
    check(blz_vertex_cover(g.get(), buf.data(), n, &size));
    buf.resize(size);
    std::cout << "cover=" << join(buf) << "\n" << "tau=" << size << "\n";
  });

  // ------------------------------------------------------------------- thue
  auto* thue = app.add_subcommand(
      "thue", "Generate a square-free ternary word prefix");
  struct {
    std::string out;
    uint32_t length = 0;
  } thue_opt;
  thue->add_option("--length", thue_opt.length, "prefix length")->required();
  thue->add_option("--out", thue_opt.out, "string file to write")->required();
  thue->callback([&] {
    blz_string* raw = nullptr;
    check(blz_thue(thue_opt.length, &raw));
    StringPtr s(raw);
    check(blz_string_save(s.get(), thue_opt.out.c_str()));
    uint32_t n = 0;
    check(blz_string_length(s.get(), &n));
    std::cout << "length=" << n << "\n";
  });

  // ------------------------------------------------------- check-squarefree
  auto* sqfree = app.add_subcommand("check-squarefree",
                                    "Test a string for square-freeness");
  struct {
    std::string in;
  } sqfree_opt;
  sqfree->add_option("--in", sqfree_opt.in, "string file")->required();
  sqfree->callback([&] {
    StringPtr s = load_string(sqfree_opt.in);
    uint32_t start = 0, len = 0;
    int free_of_squares = 0;
    check(blz_square_free(s.get(), &start, &len, &free_of_squares));
    std::cout << "square_free=" << free_of_squares << "\n";
    if (!free_of_squares) {
      std::cout << "square_start=" << start << "\n"
                << "square_len=" << len << "\n";
      exit_code = 1;
    }
  });

  // ------------------------------------------------------------ audit-bound
  auto* audit = app.add_subcommand(
      "audit-bound",
      "Check the size floor of a hop-bounded parsing of a square-free string");
  struct {
    std::string in, parsing;
    uint32_t c = 1;
  } audit_opt;
  audit->add_option("--in", audit_opt.in, "string file")->required();
  audit->add_option("--c", audit_opt.c, "hop ceiling");
  audit->add_option("--parsing", audit_opt.parsing,
                    "parsing file (default: hop-bounded greedy)");
  audit->callback([&] {
    StringPtr s = load_string(audit_opt.in);
    ParsingPtr p;
    if (audit_opt.parsing.empty()) {
      blz_parsing* raw = nullptr;
      check(blz_parse_bounded(s.get(), audit_opt.c, &raw));
      p.reset(raw);
    } else {
      p = load_parsing(audit_opt.parsing);
    }
    blz_bound_report r{};
    check(blz_audit_bound(s.get(), audit_opt.c, p.get(), &r));
    std::cout << "n=" << r.n << "\n"
              << "c=" << r.c << "\n"
              << "parsing_size=" << r.parsing_size << "\n"
              << "lower_bound=" << r.lower_bound << "\n"
              << "lz76_size=" << r.lz76_size << "\n"
              << "ratio=" << std::fixed << std::setprecision(4) << r.ratio
              << "\n"
              << "ok=" << r.ok << "\n";
    if (!r.ok) exit_code = 1;
  });

  // ----------------------------------------------------------------- verify
  auto* verify = app.add_subcommand(
      "verify", "Validate a parsing; optionally check a hop ceiling and a "
                "size target");
  struct {
    std::string in, parsing;
    uint32_t c = 0;
    uint64_t target = 0;
  } verify_opt;
  verify->add_option("--in", verify_opt.in, "string file")->required();
  verify->add_option("--parsing", verify_opt.parsing, "parsing file")
      ->required();
  auto* copt = verify->add_option("--c", verify_opt.c,
                                  "require every hop count at most c");
  auto* topt = verify->add_option("--target", verify_opt.target,
                                  "require at most this many phrases");
  verify->callback([&] {
    StringPtr s = load_string(verify_opt.in);
    ParsingPtr p = load_parsing(verify_opt.parsing);
    int valid = 0;
    check(blz_validate(s.get(), p.get(), &valid));
    std::cout << "valid=" << valid << "\n";
    if (!valid) {
      std::cerr << blz_last_error() << "\n";
      exit_code = 1;
      return;
    }
    uint32_t size = 0;
    check(blz_parsing_size(p.get(), &size));
    uint32_t hop_max = hop_max_of(s.get(), p.get());
    std::cout << "size=" << size << "\n" << "hop_max=" << hop_max << "\n";
    if (copt->count() > 0 && hop_max > verify_opt.c) exit_code = 1;
    if (topt->count() > 0 && size > verify_opt.target) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Failure& f) {
    if (!f.msg.empty()) std::cerr << "error: " << f.msg << "\n";
    return f.code;
  }
  return exit_code;
}
