#include "doctest.h"
#include "pdtensor/instances.hpp"
#include "support.hpp"

using namespace pdtensor;

namespace {

void require_agreement(const PresentedModule& m, const PresentedModule& n) {
  OracleComparison c = oracle_compare(m, n, 6);
  std::string detail;
  for (const auto& s : c.mismatches) detail += s + "\n";
  CAPTURE(detail);
  CHECK(c.agree);
}

}  // namespace

TEST_CASE("engine and oracle agree on every encoded instance") {
  for (const auto& id : example_ids()) {
    PaperInstance in = paper_instance(id);
    for (const auto& [a, m] : in.modules) {
      for (const auto& [b, n] : in.modules) {
        CAPTURE(id);
        CAPTURE(a);
        CAPTURE(b);
        require_agreement(m, n);
      }
    }
  }
}

TEST_CASE("engine and oracle agree on 50 seeded random pairs per ring") {
  for (const auto& id : catalog_ids()) {
    auto ring = catalog_ring(id);
    SeededRng rng(splitmix64(2024, std::hash<std::string>{}(id) & 0xff));
    for (int t = 0; t < 50; ++t) {
      auto m = random_module(ring, testing::small_params(0), rng);
      auto n = random_module(ring, testing::small_params(0), rng);
      CAPTURE(id);
      CAPTURE(t);
      require_agreement(m, n);
    }
  }
}

TEST_CASE("oracle building blocks") {
  auto r1 = catalog_ring("R1");
  auto o = to_oracle(testing::R(r1));
  CHECK(oracle::hilbert_function(o, 0, 3) == std::vector<std::int64_t>{1, 2, 2, 2});
  auto kk = oracle::residue_field(o.ring);
  CHECK(oracle::hilbert_function(kk, -1, 2) == std::vector<std::int64_t>{0, 1, 0, 0});
  auto t = oracle::tor_dims(kk, kk, 2, 0, 3);
  CHECK(t[1] == std::vector<std::int64_t>{0, 2, 0, 0});
  CHECK(t[2] == std::vector<std::int64_t>{0, 0, 2, 0});
  CHECK(oracle::generator_count(oracle::direct_sum(kk, o), 0, 4) == 2);
}
