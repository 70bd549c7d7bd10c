#include "signmotif/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace signmotif {
namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::optional<long> parse_int(std::string_view s) {
  // from_chars does not accept an explicit plus sign.
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_whitespace(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

std::vector<DirectedSignRecord> parse_bitcoin_csv(std::istream& in,
                                                  ParseDiagnostics* diag) {
  std::vector<DirectedSignRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, ',');
    if (fields.size() != 4)
      throw ParseError(lineno, "expected SOURCE,TARGET,RATING,TIME");
    auto rating = parse_int(trim(fields[2]));
    if (!rating) throw ParseError(lineno, "rating is not an integer");
    std::string src = trim(fields[0]);
    std::string tgt = trim(fields[1]);
    if (src.empty() || tgt.empty())
      throw ParseError(lineno, "empty node identifier");
    if (*rating == 0) {
      if (diag) ++diag->zero_ratings_dropped;
      continue;
    }
    records.push_back({src, tgt, *rating > 0 ? Sign::Positive : Sign::Negative});
  }
  return records;
}

std::vector<DirectedSignRecord> parse_signed_tsv(std::istream& in) {
  std::vector<DirectedSignRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split_whitespace(t);
    if (fields.size() != 3)
      throw ParseError(lineno, "expected FROM<TAB>TO<TAB>SIGN");
    auto sign = parse_int(fields[2]);
    if (!sign || (*sign != 1 && *sign != -1))
      throw ParseError(lineno, "sign must be +1 or -1");
    records.push_back({fields[0], fields[1],
                       *sign > 0 ? Sign::Positive : Sign::Negative});
  }
  return records;
}

std::vector<DirectedSignRecord> parse_wiki_rfa(std::istream& in,
                                               ParseDiagnostics* diag) {
  std::vector<DirectedSignRecord> records;
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::string> src, tgt;
  std::optional<long> vot;

  auto flush = [&](std::size_t at_line) {
    if (!src && !tgt && !vot) return;
    if (!src || !tgt || !vot)
      throw ParseError(at_line, "incomplete wiki-rfa record (need SRC, TGT, VOT)");
    if (src->empty() || tgt->empty())
      throw ParseError(at_line, "empty node identifier");
    if (*vot == 0) {
      if (diag) ++diag->neutral_votes_dropped;
    } else {
      records.push_back({*src, *tgt, *vot > 0 ? Sign::Positive : Sign::Negative});
    }
    src.reset();
    tgt.reset();
    vot.reset();
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) {
      flush(lineno);
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos) continue;  // continuation of a free-text field
    std::string key = t.substr(0, colon);
    std::string value = trim(t.substr(colon + 1));
    if (key == "SRC") {
      src = value;
    } else if (key == "TGT") {
      tgt = value;
    } else if (key == "VOT") {
      auto v = parse_int(value);
      if (!v || (*v != -1 && *v != 0 && *v != 1))
        throw ParseError(lineno, "VOT must be -1, 0, or 1");
      vot = v;
    }
    // RES/YEA/DAT/TXT and unknown keys are ignored.
  }
  flush(lineno + 1);
  return records;
}

}  // namespace

std::optional<InputFormat> input_format_from_name(std::string_view name) {
  if (name == "bitcoin-csv") return InputFormat::BitcoinCsv;
  if (name == "snap-signed-tsv") return InputFormat::SnapSignedTsv;
  if (name == "wiki-rfa") return InputFormat::WikiRfa;
  if (name == "canonical-tsv") return InputFormat::CanonicalTsv;
  return std::nullopt;
}

std::string_view input_format_name(InputFormat format) {
  switch (format) {
    case InputFormat::BitcoinCsv: return "bitcoin-csv";
    case InputFormat::SnapSignedTsv: return "snap-signed-tsv";
    case InputFormat::WikiRfa: return "wiki-rfa";
    case InputFormat::CanonicalTsv: return "canonical-tsv";
  }
  return "?";
}

std::vector<DirectedSignRecord> parse_records(std::istream& input, InputFormat format,
                                              ParseDiagnostics* diagnostics) {
  switch (format) {
    case InputFormat::BitcoinCsv: return parse_bitcoin_csv(input, diagnostics);
    case InputFormat::SnapSignedTsv:
    case InputFormat::CanonicalTsv: return parse_signed_tsv(input);
    case InputFormat::WikiRfa: return parse_wiki_rfa(input, diagnostics);
  }
  throw std::logic_error("unknown input format");
}

SignedGraph load_graph(std::istream& input, InputFormat format,
                       ParseDiagnostics* diagnostics) {
  return SignedGraph::from_records(parse_records(input, format, diagnostics));
}

SignedGraph load_graph_file(const std::string& path, InputFormat format,
                            ParseDiagnostics* diagnostics) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graph(in, format, diagnostics);
}

void write_canonical_tsv(const SignedGraph& graph, std::ostream& out) {
  // Node indices follow lexicographic name order, and links are sorted by
  // endpoint indices, so rows come out sorted with u < v per line.
  for (const auto& link : graph.links()) {
    out << graph.node_name(link.u) << '\t' << graph.node_name(link.v) << '\t'
        << (link.sign == Sign::Positive ? "+1" : "-1") << '\n';
  }
}

void write_canonical_tsv_file(const SignedGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_canonical_tsv(graph, out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace signmotif
