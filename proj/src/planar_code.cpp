#include "fullerene/planar_code.hpp"

#include <algorithm>
#include <cstring>

#include <json.hpp>

namespace fullerene {

PlanarCodeReader::PlanarCodeReader(std::istream& in, bool two_byte) : in_(in), two_byte_(two_byte) {
  const std::size_t len = std::strlen(kPlanarCodeHeader);
  std::string header(len, '\0');
  in_.read(header.data(), static_cast<std::streamsize>(len));
  if (static_cast<std::size_t>(in_.gcount()) != len || header != kPlanarCodeHeader) {
    throw PlanarCodeError("missing or corrupt planar_code header");
  }
}

int PlanarCodeReader::read_value(bool wide) {
  const int lo = in_.get();
  if (lo == std::char_traits<char>::eof()) throw PlanarCodeError("truncated record " + std::to_string(count_ + 1));
  if (!wide) return lo;
  const int hi = in_.get();
  if (hi == std::char_traits<char>::eof()) throw PlanarCodeError("truncated record " + std::to_string(count_ + 1));
  return lo | (hi << 8);
}

std::optional<PlaneGraph> PlanarCodeReader::next() {
  const int first = in_.get();
  if (first == std::char_traits<char>::eof()) return std::nullopt;
  const std::string where = "record " + std::to_string(count_ + 1);
  bool wide = false;
  int n = first;
  if (first == 0) {
    if (!two_byte_) throw PlanarCodeError(where + ": n = 0 (two-byte records need the extension flag)");
    wide = true;
    n = read_value(true);
    if (n == 0) throw PlanarCodeError(where + ": n = 0");
  }
  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v) {
    for (int x = read_value(wide); x != 0; x = read_value(wide)) {
      if (x > n) throw PlanarCodeError(where + ": neighbour " + std::to_string(x) + " out of range");
      rotation[v].push_back(x - 1);
      if (rotation[v].size() > static_cast<std::size_t>(n)) throw PlanarCodeError(where + ": runaway neighbour list");
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int u : rotation[v]) {
      const auto& r = rotation[u];
      if (std::count(r.begin(), r.end(), v) != std::count(rotation[v].begin(), rotation[v].end(), u)) {
        throw PlanarCodeError(where + ": adjacency is not symmetric");
      }
    }
  }
  ++count_;
  return PlaneGraph(std::move(rotation));
}

std::vector<PlaneGraph> read_planar_code(std::istream& in, bool two_byte) {
  PlanarCodeReader reader(in, two_byte);
  std::vector<PlaneGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

void write_planar_code_header(std::ostream& out) { out.write(kPlanarCodeHeader, std::strlen(kPlanarCodeHeader)); }

void write_planar_code_graph(std::ostream& out, const PlaneGraph& g, bool two_byte) {
  const int n = g.vertex_count();
  if (n == 0) throw PlanarCodeError("cannot write an empty graph");
  if (n <= 255) {
    out.put(static_cast<char>(n));
    for (int v = 0; v < n; ++v) {
      for (int u : g.neighbours(v)) out.put(static_cast<char>(u + 1));
      out.put(0);
    }
    return;
  }
  if (!two_byte) throw PlanarCodeError("graph with " + std::to_string(n) + " vertices needs the two-byte extension");
  if (n > kMaxVertices) throw PlanarCodeError("graph too large for the two-byte extension");
  auto word = [&](int x) {
    out.put(static_cast<char>(x & 0xff));
    out.put(static_cast<char>(x >> 8));
  };
  out.put(0);
  word(n);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbours(v)) word(u + 1);
    word(0);
  }
}

void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs, bool two_byte) {
  write_planar_code_header(out);
  for (const auto& g : graphs) write_planar_code_graph(out, g, two_byte);
}

void write_analysis_record(std::ostream& out, const AnalysisRecord& r, RecordFormat format) {
  const std::string sep = r.separation ? std::to_string(*r.separation) : "-";
  if (format == RecordFormat::tsv) {
    out << r.n << '\t' << r.spiral_id.value_or("-") << '\t' << r.pip << '\t' << sep << '\t' << r.group << '\t'
        << r.hog_keyword << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["spiral_id"] = r.spiral_id ? nlohmann::ordered_json(*r.spiral_id) : nlohmann::ordered_json(nullptr);
  j["pip"] = r.pip;
  j["separation"] = r.separation ? nlohmann::ordered_json(*r.separation) : nlohmann::ordered_json("-");
  j["group"] = r.group;
  j["hog_keyword"] = r.hog_keyword;
  out << j.dump() << '\n';
}

void write_analysis_records(std::ostream& out, const std::vector<AnalysisRecord>& records, RecordFormat format) {
  for (const auto& r : records) write_analysis_record(out, r, format);
}

}  // namespace fullerene
