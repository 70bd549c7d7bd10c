#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "signmotif/graph.hpp"

namespace signmotif {

enum class InputFormat {
  BitcoinCsv,     // SOURCE,TARGET,RATING,TIME; sign(RATING), zero rejected
  SnapSignedTsv,  // FromNodeId <TAB> ToNodeId <TAB> Sign; '#' comments
  WikiRfa,        // blank-line-separated records with SRC:/TGT:/VOT: fields
  CanonicalTsv,   // u <TAB> v <TAB> +-1, one undirected link per line
};

std::optional<InputFormat> input_format_from_name(std::string_view name);
std::string_view input_format_name(InputFormat format);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Records rejected by a format rule (not malformed input).
struct ParseDiagnostics {
  std::size_t zero_ratings_dropped = 0;   // bitcoin-csv rating == 0
  std::size_t neutral_votes_dropped = 0;  // wiki-rfa VOT == 0
};

std::vector<DirectedSignRecord> parse_records(std::istream& input, InputFormat format,
                                              ParseDiagnostics* diagnostics = nullptr);

/// Loads any supported format into the undirected graph.
SignedGraph load_graph(std::istream& input, InputFormat format,
                       ParseDiagnostics* diagnostics = nullptr);
SignedGraph load_graph_file(const std::string& path, InputFormat format,
                            ParseDiagnostics* diagnostics = nullptr);

/// Canonical interchange format: "u<TAB>v<TAB>+-1", u < v lexicographically,
/// rows sorted, UTF-8, LF endings.
void write_canonical_tsv(const SignedGraph& graph, std::ostream& out);
void write_canonical_tsv_file(const SignedGraph& graph, const std::string& path);

}  // namespace signmotif
