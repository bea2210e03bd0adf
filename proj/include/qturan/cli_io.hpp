#ifndef QTURAN_CLI_IO_HPP
#define QTURAN_CLI_IO_HPP

#include "qturan/solver.hpp"
#include "qturan/subgraph.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qturan {

inline constexpr const char *kSchemaVersion = "1";

/// Malformed input; the message names the offending line or field.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * On-disk form of a subgraph: Q_n minus `deleted_edges`. Pairs are stored as
 * [a, b] with a < b, sorted, so equal graphs serialize to identical bytes.
 */
struct SubgraphDocument {
  std::string schema_version = kSchemaVersion;
  int n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deleted_edges;
  std::map<std::string, std::string> metadata;
};

SubgraphDocument to_document(const CubeSubgraph &g,
                             std::map<std::string, std::string> metadata = {});
CubeSubgraph from_document(const SubgraphDocument &doc);

std::string write_subgraph(const CubeSubgraph &g,
                           const std::map<std::string, std::string> &metadata = {});
std::string write_document(const SubgraphDocument &doc);

/// Accepts subgraph and certificate files alike. Throws FormatError.
SubgraphDocument read_document(const std::string &text);
CubeSubgraph read_subgraph(const std::string &text);

std::string write_certificate(const DeletionCertificate &c,
                              const std::map<std::string, std::string> &metadata = {});
DeletionCertificate read_certificate(const std::string &text);

/// "p edge V E" then "e a b" per edge (vertices numbered mask+1), ascending dense_id.
std::string export_dimacs(const CubeSubgraph &g);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

} // namespace qturan

#endif
