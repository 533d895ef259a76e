#include "doctest.h"
#include "pdtensor/properties.hpp"
#include "support.hpp"

using namespace pdtensor;
using testing::cyc;
using testing::k;
using testing::P;
using testing::R;

namespace {

std::vector<std::string> suite_rings() { return {"R1", "R2", "R3", "R4", "R5", "R6"}; }

}  // namespace

TEST_CASE("resolution of the residue field over R1 is 2-periodic") {
  auto r1 = catalog_ring("R1");
  auto res = minimal_resolution(k(r1), 5);
  CHECK(res.betti.totals() == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK_FALSE(res.betti.complete);
  CHECK(res.complex.composes_to_zero());
  CHECK(res.complex.all_entries_in_maximal_ideal());
  auto m = minimal_resolution(cyc(r1, {"x+y"}), 4);
  CHECK(m.betti.totals() == std::vector<int>{1, 1});
  CHECK(m.betti.complete);
  auto free = minimal_resolution(PresentedModule::free(r1, {0, 3}), 4);
  CHECK(free.betti.totals() == std::vector<int>{2});
  CHECK(free.betti.get(0, 3) == 1);
}

TEST_CASE("syzygy modules") {
  auto r6 = catalog_ring("R6");
  auto i = syzygy_module(cyc(r6, {"x", "y"}), 1).minimal();
  CHECK(i.num_generators() == 2);
  CHECK(is_zero(syzygy_module(R(r6), 1)));
  auto r1 = catalog_ring("R1");
  auto m = syzygy_module(k(r1), 1);
  CHECK(m.minimal().num_generators() == 2);
  CHECK(m.minimal().twists() == std::vector<int>{1, 1});
}

TEST_CASE("restriction to the ambient ring") {
  auto r1 = catalog_ring("R1");
  auto s = restrict_to_ambient(R(r1));
  CHECK(s.ring()->is_polynomial_ring());
  CHECK(s.relations().size() == 1);
  auto kk = minimal_resolution(restrict_to_ambient(k(r1)), 4).betti;
  CHECK(kk.totals() == std::vector<int>{1, 2, 1});
}

TEST_CASE("depth") {
  CHECK(ring_depth(catalog_ring("R4")) == 2);
  CHECK(*depth(k(catalog_ring("R4"))) == 0);
  CHECK(ring_depth(catalog_ring("R2")) == 0);
  CHECK(ring_depth(catalog_ring("R5")) == 2);
  auto r1 = catalog_ring("R1");
  CHECK_FALSE(depth(PresentedModule(r1, {0}, {vec::unit(2, 0, r1->scalar(1))})).has_value());
}

TEST_CASE("projective dimension verdicts") {
  auto r4 = catalog_ring("R4");
  auto m = cyc(r4, {"x*y", "z"});
  auto v = decide_pd(m);
  CHECK(v.infinite());
  CHECK(v.certificate_index == 3);
  CHECK(decide_pd(cyc(r4, {"x*z", "y"})).infinite());
  auto t = decide_pd(tensor_product(m, cyc(r4, {"x*z", "y"})));
  CHECK(t.finite());
  CHECK(t.value == 2);
  auto r3 = catalog_ring("R3");
  auto p3 = decide_pd(cyc(r3, {"z", "w", "x+y"}));
  CHECK(p3.finite());
  CHECK(p3.value == 3);
  CHECK(decide_pd(PresentedModule(r4, {0}, {vec::unit(3, 0, r4->scalar(1))})).kind ==
        PdVerdict::Kind::kMinusInfinity);
  CHECK(decide_pd(R(r4)).value == 0);
}

TEST_CASE("degree cap yields a bound-exceeded verdict") {
  auto r5 = catalog_ring("R5");
  ScopedEngineLimits limits(EngineLimits{2});
  auto v = decide_pd(cyc(r5, {"x*w", "z"}));
  CHECK(v.kind == PdVerdict::Kind::kBoundExceeded);
  CHECK(v.bound == 2);
}

TEST_CASE("Hilbert series") {
  auto r1 = catalog_ring("R1");
  auto h = hilbert_series(R(r1));
  CHECK(h.dim == 1);
  CHECK(h.multiplicity == 2);
  CHECK(h.hf_range(0, 4) == std::vector<std::int64_t>{1, 2, 2, 2, 2});
  auto hk = hilbert_series(k(r1));
  CHECK(hk.dim == 0);
  CHECK(hk.to_string() == "(1)");
  auto h6 = hilbert_series(R(catalog_ring("R6")));
  CHECK(h6.dim == 2);
  CHECK(h6.multiplicity == 2);
  CHECK(h6.hf_range(0, 4) == std::vector<std::int64_t>{1, 3, 5, 7, 9});
  CHECK(hilbert_series(PresentedModule(r1, {0}, {vec::unit(2, 0, r1->scalar(1))})).dim == -1);
}

TEST_CASE("Hilbert series by resolution and by lead terms agree with the oracle") {
  for (const auto& id : suite_rings()) {
    auto ring = catalog_ring(id);
    SeededRng rng(41);
    for (int t = 0; t < 10; ++t) {
      auto m = random_module(ring, testing::small_params(0), rng);
      auto a = hilbert_series(m), b = hilbert_series_from_leads(m);
      CHECK(a.numerator == b.numerator);
      CHECK(a.hf_range(-1, 6) == testing::oracle_hf(m, -1, 6));
    }
  }
}

TEST_CASE("CM profiles") {
  auto r1 = catalog_ring("R1");
  auto l = cm_profile(cyc(r1, {"x"}));
  CHECK(l.is_mcm);
  CHECK(l.depth == 1);
  CHECK_FALSE(cm_profile(k(r1)).is_mcm);
  auto rr = cm_profile(R(r1));
  CHECK(rr.is_mcm);
  CHECK_FALSE(rr.is_ulrich);
  CHECK(cm_profile(R(testing::poly_ring({"x", "y"}))).is_ulrich);
  CHECK_THROWS_AS(cm_profile(PresentedModule(r1, {0}, {vec::unit(2, 0, r1->scalar(1))})), AlgebraError);
}

TEST_CASE("resolution invariants on seeded random modules") {
  for (const auto& id : suite_rings()) {
    auto ring = catalog_ring(id);
    SeededRng rng(43);
    for (int t = 0; t < 8; ++t) {
      auto m = random_module(ring, testing::small_params(0), rng);
      auto res = minimal_resolution(m, 3);
      CHECK(res.complex.composes_to_zero());
      CHECK(res.complex.all_entries_in_maximal_ideal());
      // Betti numbers against Tor(M, k) from resolving k instead.
      auto tk = tor(k(ring), m, 3);
      for (int i = 0; i <= std::min(3, res.betti.computed_to); ++i) {
        for (int j = -1; j <= 6; ++j) {
          CHECK(res.betti.get(i, j) == tk.series[i].hf(j));
        }
      }
    }
  }
}

TEST_CASE("depth two ways: ambient pd and the first nonvanishing Ext(k, M)") {
  for (const auto& id : suite_rings()) {
    auto ring = catalog_ring(id);
    SeededRng rng(47);
    for (int t = 0; t < 6; ++t) {
      auto m = random_module(ring, testing::small_params(0), rng);
      if (is_zero(m)) continue;
      const int d = *depth(m);
      CHECK(d == static_cast<int>(ring->nvars()) - ambient_pd(m));
      auto e = ext(k(ring), m, d);
      for (int i = 0; i < d; ++i) CHECK(e.vanishes(i));
      CHECK_FALSE(e.vanishes(d));
    }
  }
}

TEST_CASE("Euler characteristic of the truncated R-resolution matches the Hilbert function") {
  for (const auto& id : suite_rings()) {
    auto ring = catalog_ring(id);
    const auto hr = hilbert_series(R(ring));
    SeededRng rng(53);
    for (int t = 0; t < 6; ++t) {
      auto m = random_module(ring, testing::small_params(0), rng);
      auto res = minimal_resolution(m, 7);
      // F_i is generated in degrees >= i + min twist, so degrees <= 6 see only i <= 7.
      for (int d = 0; d <= 6; ++d) {
        std::int64_t sum = 0;
        for (const auto& [key, b] : res.betti.entries) {
          if (key.first > 7) continue;
          sum += (key.first % 2 ? -1 : 1) * b * hr.hf(d - key.second);
        }
        CHECK(sum == hilbert_series(m).hf(d));
      }
    }
  }
}

TEST_CASE("pd verdicts recertify on seeded random modules") {
  for (const auto& id : suite_rings()) {
    auto ring = catalog_ring(id);
    SeededRng rng(59);
    for (int t = 0; t < 8; ++t) {
      auto m = random_module(ring, testing::small_params(0), rng);
      auto v = decide_pd(m);
      CHECK(recertify(m, v));
      if (v.finite()) CHECK(v.value <= ring_depth(ring));
    }
  }
}
