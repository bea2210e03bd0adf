#include "qturan/cli_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qturan {

using nlohmann::json;

namespace {

std::pair<std::uint32_t, std::uint32_t> as_pair(const EdgeIndex &e) {
  return {e.low().mask, e.high().mask};
}

const json &require_field(const json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end())
    throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

int read_dimension(const json &j) {
  const auto &n = require_field(j, "n");
  if (!n.is_number_integer())
    throw FormatError("field 'n': expected an integer");
  const auto value = n.get<long long>();
  if (value < 1 || value > kMaxDimension)
    throw FormatError("field 'n': dimension " + std::to_string(value) + " out of range [1, " +
                      std::to_string(kMaxDimension) + "]");
  return static_cast<int>(value);
}

json document_json(const SubgraphDocument &doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["n"] = doc.n;
  j["deleted_edges"] = json::array();
  for (auto [a, b] : doc.deleted_edges)
    j["deleted_edges"].push_back({a, b});
  j["metadata"] = doc.metadata;
  return j;
}

json parse(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

SubgraphDocument document_from_json(const json &j) {
  if (!j.is_object())
    throw FormatError("top level: expected a JSON object");
  SubgraphDocument doc;
  const auto &version = require_field(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
    throw FormatError("field 'schema_version': unsupported version " + version.dump());
  doc.schema_version = version.get<std::string>();
  doc.n = read_dimension(j);

  const auto &edges = require_field(j, "deleted_edges");
  if (!edges.is_array())
    throw FormatError("field 'deleted_edges': expected an array");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "deleted_edges[" + std::to_string(i) + "]: ";
    const auto &pair = edges[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned())
      throw FormatError(where + "expected [mask_a, mask_b] with non-negative integers");
    const auto a = pair[0].get<std::uint64_t>(), b = pair[1].get<std::uint64_t>();
    if ((a >> doc.n) != 0 || (b >> doc.n) != 0)
      throw FormatError(where + "vertex mask out of range for n=" + std::to_string(doc.n));
    const CubeVertex va{static_cast<std::uint32_t>(a)}, vb{static_cast<std::uint32_t>(b)};
    if (!is_cube_edge(va, vb, doc.n))
      throw FormatError(where + "not a hypercube edge (" + std::to_string(a) + ", " +
                        std::to_string(b) + ")");
    const auto key = std::minmax(va.mask, vb.mask);
    if (!seen.insert(key).second)
      throw FormatError(where + "duplicate edge");
    doc.deleted_edges.emplace_back(key.first, key.second);
  }
  std::sort(doc.deleted_edges.begin(), doc.deleted_edges.end());

  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object())
      throw FormatError("field 'metadata': expected an object");
    for (const auto &[key, value] : it->items()) {
      if (!value.is_string())
        throw FormatError("field 'metadata." + key + "': expected a string");
      doc.metadata[key] = value.get<std::string>();
    }
  }
  return doc;
}

} // namespace

SubgraphDocument to_document(const CubeSubgraph &g, std::map<std::string, std::string> metadata) {
  SubgraphDocument doc;
  doc.n = g.dimension();
  for (const auto &e : g.missing_edges())
    doc.deleted_edges.push_back(as_pair(e));
  std::sort(doc.deleted_edges.begin(), doc.deleted_edges.end());
  doc.metadata = std::move(metadata);
  return doc;
}

CubeSubgraph from_document(const SubgraphDocument &doc) {
  auto g = CubeSubgraph::full(doc.n);
  for (auto [a, b] : doc.deleted_edges)
    g.delete_edge(edge_between(CubeVertex{a}, CubeVertex{b}, doc.n));
  return g;
}

std::string write_document(const SubgraphDocument &doc) {
  auto sorted = doc;
  std::sort(sorted.deleted_edges.begin(), sorted.deleted_edges.end());
  return document_json(sorted).dump(2) + "\n";
}

std::string write_subgraph(const CubeSubgraph &g,
                           const std::map<std::string, std::string> &metadata) {
  return write_document(to_document(g, metadata));
}

SubgraphDocument read_document(const std::string &text) { return document_from_json(parse(text)); }

CubeSubgraph read_subgraph(const std::string &text) { return from_document(read_document(text)); }

std::string write_certificate(const DeletionCertificate &c,
                              const std::map<std::string, std::string> &metadata) {
  SubgraphDocument doc;
  doc.n = c.n;
  for (const auto &e : c.deleted)
    doc.deleted_edges.push_back(as_pair(e));
  std::sort(doc.deleted_edges.begin(), doc.deleted_edges.end());
  doc.metadata = metadata;
  auto j = document_json(doc);
  j["claimed_free"] = c.claimed_free;
  j["claimed_optimal"] = c.claimed_optimal;
  if (c.pattern)
    j["pattern"] = {c.pattern->k, c.pattern->l};
  return j.dump(2) + "\n";
}

DeletionCertificate read_certificate(const std::string &text) {
  const auto j = parse(text);
  const auto doc = document_from_json(j);
  DeletionCertificate c;
  c.n = doc.n;
  for (auto [a, b] : doc.deleted_edges)
    c.deleted.push_back(edge_between(CubeVertex{a}, CubeVertex{b}, doc.n));
  std::sort(c.deleted.begin(), c.deleted.end(),
            [](const EdgeIndex &x, const EdgeIndex &y) { return x.dense_id < y.dense_id; });
  for (const char *flag : {"claimed_free", "claimed_optimal"}) {
    const auto &v = require_field(j, flag);
    if (!v.is_boolean())
      throw FormatError(std::string("field '") + flag + "': expected a boolean");
  }
  c.claimed_free = j["claimed_free"].get<bool>();
  c.claimed_optimal = j["claimed_optimal"].get<bool>();
  if (auto it = j.find("pattern"); it != j.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
        !(*it)[1].is_number_integer())
      throw FormatError("field 'pattern': expected [k, l]");
    try {
      c.pattern = DoubleStarPattern((*it)[0].get<int>(), (*it)[1].get<int>());
    } catch (const std::invalid_argument &e) {
      throw FormatError(std::string("field 'pattern': ") + e.what());
    }
  }
  return c;
}

std::string export_dimacs(const CubeSubgraph &g) {
  std::ostringstream out;
  out << "p edge " << (std::uint64_t{1} << g.dimension()) << ' ' << g.edge_count() << '\n';
  for (const auto &e : g.present_edges())
    out << "e " << e.low().mask + 1 << ' ' << e.high().mask + 1 << '\n';
  return out.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << contents;
}

} // namespace qturan
