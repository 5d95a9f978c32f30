#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "gucycle/builders.hpp"
#include "gucycle/errors.hpp"
#include "gucycle/guc_format.hpp"
#include "gucycle/verifier.hpp"

using namespace gucycle;

namespace {

HostGraph h3() {
  return HostGraph(6, 3, true,
                   {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}, {{2, 4}, 1}, {{3, 5}, 1}, {{4, 5}, 1}});
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gucycle_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

// Flip one host pair: simple hosts toggle presence, multigraph hosts step the
// multiplicity by one in a direction that stays non-negative.
HostGraph toggle(const HostGraph& host, int u, int v, bool up) {
  const auto m = host.multiplicity(u, v);
  if (host.simple()) return host.with_multiplicity(u, v, m == 0 ? 1 : 0);
  return host.with_multiplicity(u, v, (up || m == 0) ? m + 1 : m - 1);
}

}  // namespace

TEST_CASE("valid hosts") {
  const auto r = verify(h3(), Family::permutations, {3, 0});
  CHECK(r.valid);
  CHECK(r.window_count == 6);
  CHECK(r.to_text().rfind("valid, 6 windows", 0) == 0);

  const auto inv = build_gucycle(Family::involutions, {4, 0});
  const auto ri = verify(inv, Family::involutions, {4, 0});
  CHECK(ri.valid);
  CHECK(ri.window_count == 10);
}

TEST_CASE("host missing an edge") {
  auto edges = h3().edge_map();
  edges.erase({2, 4});
  const HostGraph broken(6, 3, true, edges);
  const auto r = verify(broken, Family::permutations, {3, 0});
  CHECK_FALSE(r.valid);
  CHECK(r.missing_total >= 1);
  CHECK(r.to_text().rfind("invalid, 6 windows (expected 6)", 0) == 0);
}

TEST_CASE("edgeless host repeats the identity") {
  const HostGraph empty(6, 3, true, {});
  const auto r = verify(empty, Family::permutations, {3, 0});
  CHECK_FALSE(r.valid);
  CHECK(r.duplicated == std::vector<std::string>{"123 (x6)"});
  CHECK(r.missing_total == 5);
  CHECK(r.missing == std::vector<std::string>{"132", "213", "231", "312", "321"});
}

TEST_CASE("window size that does not match the family") {
  const auto r = verify(h3(), Family::permutations, {4, 0});
  CHECK_FALSE(r.valid);
  CHECK(r.invalid_total == 6);
  CHECK(r.missing_total == 24);
}

TEST_CASE("verify_file") {
  const auto host = build_gucycle(Family::subsets, {6, 2});
  const auto good = write_temp("good.guc", serialize(host, {Family::subsets, {6, 2}}));
  CHECK(verify_file(good.string()).valid);

  // Same host declared as partitions: windows are not cliques, or collide.
  const HostGraph as_partition_host(host.size(), host.window(), true, host.edge_map());
  const auto mislabeled = write_temp(
      "mislabeled.guc", serialize(as_partition_host, {Family::partitions, {6, 0}}));
  const auto r = verify_file(mislabeled.string());
  CHECK_FALSE(r.valid);
  CHECK(r.invalid_total > 0);

  // A shorter host misses some subsets.
  auto edges = host.edge_map();
  std::map<std::pair<int, int>, std::uint32_t> trimmed;
  for (const auto& [pair, m] : edges) {
    if (pair.second <= 14) trimmed.emplace(pair, m);
  }
  const auto short_host = write_temp(
      "short.guc", serialize(HostGraph(14, 6, true, trimmed), {Family::subsets, {6, 2}}));
  const auto rs = verify_file(short_host.string());
  CHECK_FALSE(rs.valid);
  CHECK(rs.window_count == 14);
  CHECK(rs.expected_count == 15);

  const auto garbage = write_temp("garbage.guc", "guc 2\n");
  CHECK_THROWS_AS(verify_file(garbage.string()), ParseError);
  CHECK_THROWS_AS(verify_file("/nonexistent/host.guc"), Error);

  for (const auto& p : {good, mislabeled, short_host, garbage}) std::filesystem::remove(p);
}

TEST_CASE("parallel verification agrees with the serial run") {
  const auto host = build_gucycle(Family::permutations, {6, 0});
  for (unsigned jobs : {2u, 3u, 8u, 1000u}) {
    const auto r = verify(host, Family::permutations, {6, 0}, jobs);
    CHECK(r.valid);
    CHECK(r.window_count == 720);
  }
  const HostGraph empty(30, 4, true, {});
  const auto serial = verify(empty, Family::partitions, {4, 0}, 1);
  const auto parallel = verify(empty, Family::partitions, {4, 0}, 4);
  CHECK(serial.to_text() == parallel.to_text());
}

TEST_CASE("single toggles break every built host") {
  std::mt19937 rng(7);
  const std::vector<std::pair<Family, FamilyParams>> cases = {
      {Family::subsets, {3, 1}},     {Family::subsets, {5, 2}},
      {Family::multisets, {3, 2}},   {Family::multisets, {4, 2}},
      {Family::permutations, {3, 0}}, {Family::permutations, {4, 0}},
      {Family::involutions, {4, 0}}, {Family::involutions, {5, 0}},
      {Family::partitions, {3, 0}},  {Family::partitions, {4, 0}}};
  for (const auto& [family, params] : cases) {
    const auto host = build_gucycle(family, params);
    const int N = host.size();
    for (int trial = 0; trial < 40; ++trial) {
      const int u = 1 + static_cast<int>(rng() % static_cast<unsigned>(N));
      const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(host.window() - 1));
      const int v = host.wrap(u + d);
      if (u == v) continue;
      const auto changed = toggle(host, std::min(u, v), std::max(u, v), rng() % 2 == 0);
      CAPTURE(family_name(family));
      CAPTURE(u);
      CAPTURE(v);
      CHECK_FALSE(verify(changed, family, params).valid);
    }
  }
}

TEST_CASE("report lists are truncated") {
  const HostGraph empty(200, 6, true, {});
  const auto r = verify(empty, Family::partitions, {6, 0});
  CHECK_FALSE(r.valid);
  CHECK(r.missing_total == 202);
  CHECK(r.missing.size() == VerificationReport::kReportLimit);
  CHECK(r.duplicated_total == 1);

  const HostGraph dense(60, 3, true, {});
  const auto inv = verify(dense, Family::subsets, {3, 1});
  CHECK(inv.invalid_total == 60);
  CHECK(inv.invalid_windows.size() == VerificationReport::kReportLimit);
  CHECK(inv.invalid_windows.front().index == 1);
}
