#include "oracles.hpp"
#include "qturan/cli_io.hpp"
#include "qturan/construct.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <sstream>

using namespace qturan;

TEST_CASE("extremal G_3 round trip") {
  const auto g = base_pair_3().g;
  const auto text = write_subgraph(g);
  const auto doc = read_document(text);
  CHECK(doc.n == 3);
  CHECK(doc.deleted_edges.size() == 3);
  CHECK(read_subgraph(text) == g);
  CHECK(write_subgraph(read_subgraph(text)) == text);
}

TEST_CASE("reader diagnostics") {
  auto expect_error = [](const std::string &text, const std::string &needle) {
    try {
      read_subgraph(text);
      FAIL("accepted: " << text);
    } catch (const FormatError &e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
    }
  };
  expect_error(R"({"schema_version":"1","n":3,"deleted_edges":[[0,3]]})", "not a hypercube edge");
  expect_error(R"({"schema_version":"1","n":3,"deleted_edges":[[0,1],[1,0]]})", "duplicate");
  expect_error(R"({"schema_version":"1","n":3,"deleted_edges":[[0,8]]})", "out of range");
  expect_error(R"({"schema_version":"1","n":3,"deleted_edges":[[0,-1]]})", "deleted_edges[0]");
  expect_error(R"({"schema_version":"2","n":3,"deleted_edges":[]})", "schema_version");
  expect_error(R"({"n":3,"deleted_edges":[]})", "schema_version");
  expect_error(R"({"schema_version":"1","n":0,"deleted_edges":[]})", "'n'");
  expect_error(R"({"schema_version":"1","n":3})", "deleted_edges");
  expect_error("{\"schema_version\":\"1\",\n\"n\":3,", "line 2");
}

TEST_CASE("serialization is canonical and round-trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = oracle::random_subgraph(n, 0.2, rng);
    auto doc = to_document(g, {{"trial", std::to_string(trial)}});
    const auto text = write_document(doc);
    REQUIRE(read_subgraph(text) == g);
    std::shuffle(doc.deleted_edges.begin(), doc.deleted_edges.end(), rng);
    REQUIRE(write_document(doc) == text);
  }
}

TEST_CASE("certificates round-trip") {
  auto c = certificate_for(extremal_pair(4).g, false);
  c.pattern = DoubleStarPattern(3, 3);
  const auto text = write_certificate(c);
  const auto back = read_certificate(text);
  CHECK(back.n == 4);
  CHECK(back.deleted == c.deleted);
  CHECK(back.pattern == c.pattern);
  CHECK(write_certificate(back) == text);
  // A certificate is also readable as a subgraph.
  CHECK(read_subgraph(text) == extremal_pair(4).g);
}

TEST_CASE("DIMACS export") {
  CHECK(export_dimacs(full(1)) == "p edge 2 1\ne 1 2\n");
  const auto q3 = export_dimacs(full(3));
  CHECK(std::count(q3.begin(), q3.end(), '\n') == 13);
  CHECK(q3.rfind("p edge 8 12\ne 1 2\ne 3 4\n", 0) == 0);
  const auto g4 = export_dimacs(extremal_pair(4).g);
  CHECK(g4.rfind("p edge 16 26\n", 0) == 0);
  std::istringstream lines(g4);
  int edge_lines = 0;
  for (std::string line; std::getline(lines, line);)
    edge_lines += line.rfind("e ", 0) == 0;
  CHECK(edge_lines == 26);
}
