#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/plane_graph.hpp"

namespace fullerene {

class PlanarCodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

// Reads graphs one at a time. With `two_byte` set, a record starting with a
// zero byte is read as n and neighbours in little-endian 16-bit words.
class PlanarCodeReader {
 public:
  explicit PlanarCodeReader(std::istream& in, bool two_byte = false);
  // Next graph, or nothing at a clean end of stream.
  std::optional<PlaneGraph> next();
  // Index of the last graph returned, 1-based.
  long long count() const { return count_; }

 private:
  int read_value(bool wide);
  std::istream& in_;
  bool two_byte_;
  long long count_ = 0;
};

std::vector<PlaneGraph> read_planar_code(std::istream& in, bool two_byte = false);

void write_planar_code_header(std::ostream& out);
// Graphs with more than 255 vertices need `two_byte`; smaller graphs always
// use the one-byte layout.
void write_planar_code_graph(std::ostream& out, const PlaneGraph& g, bool two_byte = false);
void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs, bool two_byte = false);

struct AnalysisRecord {
  int n = 0;
  std::optional<std::string> spiral_id;
  std::string pip;
  std::optional<int> separation;
  std::string group;
  std::string hog_keyword;
};

enum class RecordFormat { tsv, json };

// One line per record, fields n, spiral_id, pip, separation, group,
// hog_keyword. Missing values print as "-" in TSV and null in JSON, except an
// undefined separation which is "-" in both.
void write_analysis_record(std::ostream& out, const AnalysisRecord& r, RecordFormat format);
void write_analysis_records(std::ostream& out, const std::vector<AnalysisRecord>& records, RecordFormat format);

}  // namespace fullerene
