#include "doctest.h"
#include "support.hpp"

using namespace pdtensor;
using testing::cyc;
using testing::k;
using testing::P;
using testing::R;

namespace {

std::vector<std::string> rings() { return {"R1", "R3", "R4", "R5", "R6"}; }

std::vector<std::int64_t> dims(const FunctorProfile& p, int i) { return p.dims(i, -2, 6); }

}  // namespace

TEST_CASE("Tor examples") {
  auto r1 = catalog_ring("R1");
  auto m = cyc(r1, {"x+y"});
  auto t = tor(m, R(r1), 3);
  CHECK(t.vanishes_between(1, 3));
  CHECK(testing::engine_hf(t.modules[0], 0, 4) == testing::engine_hf(m, 0, 4));
  auto r4 = catalog_ring("R4");
  auto t5 = tor(cyc(r4, {"x*y", "z"}), cyc(r4, {"x*z", "y"}), 2);
  CHECK(dims(t5, 0) == testing::engine_hf(cyc(r4, {"y", "z"}), -2, 6));
  // x, y annihilate each other, yet R/(x) (x) R/(y) = k and Tor_1 has the x*y = 0 relation's trace.
  auto txy = tor(cyc(r1, {"x"}), cyc(r1, {"y"}), 2);
  auto oracle_dims = oracle::tor_dims(to_oracle(cyc(r1, {"x"})), to_oracle(cyc(r1, {"y"})), 2, 0, 4);
  CHECK(txy.dims(1, 0, 4) == oracle_dims[1]);
  CHECK(txy.dims(2, 0, 4) == oracle_dims[2]);
}

TEST_CASE("Ext examples") {
  auto r1 = catalog_ring("R1");
  auto e = ext(R(r1), cyc(r1, {"x"}), 3);
  CHECK(e.vanishes_between(1, 3));
  auto ex = ext(cyc(r1, {"x"}), R(r1), 4);
  CHECK(ex.vanishes_between(1, 4));
  auto ek = ext(k(r1), R(r1), 2);
  CHECK(ek.vanishes(0));
  CHECK_FALSE(ek.vanishes(1));
}

TEST_CASE("Tor is balanced on seeded random pairs") {
  for (const auto& id : rings()) {
    auto ring = catalog_ring(id);
    SeededRng rng(61);
    for (int t = 0; t < 5; ++t) {
      auto a = random_module(ring, testing::small_params(0), rng);
      auto b = random_module(ring, testing::small_params(0), rng);
      auto ab = tor(a, b, 3), ba = tor(b, a, 3);
      for (int i = 0; i <= 3; ++i) CHECK(dims(ab, i) == dims(ba, i));
    }
  }
}

TEST_CASE("Tor from the total tensor complex equals Tor from one resolution") {
  for (const auto& id : rings()) {
    auto ring = catalog_ring(id);
    SeededRng rng(67);
    for (int t = 0; t < 4; ++t) {
      auto a = random_module(ring, testing::small_params(0), rng);
      auto b = random_module(ring, testing::small_params(0), rng);
      auto pa = minimal_resolution(a, 4).complex, pb = minimal_resolution(b, 4).complex;
      auto x = total_tensor_complex(pa, pb);
      CHECK(x.composes_to_zero());
      auto one = tor(a, b, 3);
      for (int i = 0; i <= 3; ++i) {
        // A complex shorter than i has zero homology there.
        if (i > static_cast<int>(x.length())) {
          CHECK(one.vanishes(i));
        } else {
          CHECK(hilbert_series(complex_homology(x, i)).hf_range(-2, 6) == dims(one, i));
        }
      }
    }
  }
}

TEST_CASE("total tensor complex with a trivial factor") {
  auto r4 = catalog_ring("R4");
  auto q = minimal_resolution(cyc(r4, {"x*z", "y"}), 3).complex;
  FreeComplex p;
  p.ring = r4;
  p.modules = {{0}};
  auto x = total_tensor_complex(p, q);
  REQUIRE(x.modules.size() == q.modules.size());
  for (std::size_t i = 0; i < q.modules.size(); ++i) CHECK(x.modules[i] == q.modules[i]);
  auto pm = minimal_resolution(cyc(r4, {"x*y", "z"}), 3).complex;
  auto h0 = complex_homology(total_tensor_complex(pm, q), 0);
  CHECK(testing::engine_hf(h0, 0, 6) == testing::engine_hf(cyc(r4, {"y", "z"}), 0, 6));
}

TEST_CASE("homology of resolutions") {
  auto r1 = catalog_ring("R1");
  auto res = minimal_resolution(k(r1), 4).complex;
  CHECK(compare_iso(complex_homology(res, 0), k(r1)).equal);
  for (int i = 1; i < 4; ++i) CHECK(is_zero(complex_homology(res, i)));
  // ex-2.1 (ii): M = R/(x+y), N = R/(x-y), with x - y a zerodivisor on M.
  auto m = cyc(r1, {"x+y"}), n = cyc(r1, {"x-y"});
  auto x = minimal_resolution(m, 3).complex;
  FreeComplex xn = total_tensor_complex(x, minimal_resolution(n, 3).complex);
  auto h1 = complex_homology(xn, 1);
  CHECK_FALSE(is_zero(h1));
  auto od = oracle::tor_dims(to_oracle(m), to_oracle(n), 1, 0, 4);
  CHECK(testing::engine_hf(h1, 0, 4) == od[1]);
  CHECK(decide_pd(tensor_product(m, n)).infinite());
}

TEST_CASE("canonical modules") {
  auto r1 = catalog_ring("R1");
  auto w1 = canonical_module(r1);
  CHECK(is_free(w1).free);
  CHECK(is_free(w1).rank == 1);
  CHECK(is_free(canonical_module(catalog_ring("R6"))).free);
  auto w5 = canonical_module(catalog_ring("R5"));
  CHECK_FALSE(is_free(w5).free);
  CHECK(w5.minimal().num_generators() == 2);
  CHECK_THROWS_AS(canonical_module(catalog_ring("R2")), AlgebraError);
}

TEST_CASE("injective dimension") {
  auto r1 = catalog_ring("R1");
  auto w = decide_id(canonical_module(r1));
  CHECK(w.finite());
  CHECK(w.value == 1);
  auto kk = decide_id(k(r1));
  CHECK(kk.infinite());
  CHECK(kk.certificate_index == 2);
  auto r6 = catalog_ring("R6");
  auto i = syzygy_module(cyc(r6, {"x", "y"}), 1);
  auto t = decide_id(tensor_product(i, i));
  CHECK(t.finite());
  CHECK(t.value == 2);
  CHECK(bass_numbers(k(r1), 3) == std::vector<std::int64_t>{1, 2, 2, 2});
}

TEST_CASE("totally reflexive check") {
  auto r1 = catalog_ring("R1");
  CHECK(totally_reflexive_check(PresentedModule::free(r1, {0, 1}), 4).confirmed);
  CHECK(totally_reflexive_check(cyc(r1, {"x"}), 4).confirmed);
  auto r5 = catalog_ring("R5");
  auto c = totally_reflexive_check(cyc(r5, {"x*w", "z"}), 4);
  CHECK_FALSE(c.confirmed);
  CHECK(c.refuted_at <= 4);
  CHECK(c.ext_index >= 1);
  CHECK_THROWS_AS(totally_reflexive_check(k(r1), 0), AlgebraError);
}

TEST_CASE("Betti growth windows") {
  auto r1 = catalog_ring("R1");
  auto f = betti_growth_report(R(r1), 3);
  CHECK(f.betti == std::vector<int>{1, 0, 0, 0});
  auto kk = betti_growth_report(k(r1), 5);
  CHECK(kk.betti == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK_FALSE(kk.strictly_increasing(1, 5));
  auto r5 = catalog_ring("R5");
  auto m = betti_growth_report(cyc(r5, {"x*w", "z"}), 8);
  CHECK(m.strictly_increasing(2, 8));
  auto od = oracle::tor_dims(to_oracle(cyc(r5, {"x*w", "z"})), to_oracle(k(r5)), 3, 0, 6);
  for (int i = 2; i <= 3; ++i) {
    std::int64_t total = 0;
    for (auto x : od[i]) total += x;
    CHECK(total == m.betti[i]);
  }
}

TEST_CASE("local freeness on the punctured spectrum") {
  auto r6 = catalog_ring("R6");
  CHECK(locally_free_on_punctured_spectrum(syzygy_module(cyc(r6, {"x", "y"}), 1)));
  auto r3 = catalog_ring("R3");
  CHECK_FALSE(locally_free_on_punctured_spectrum(cyc(r3, {"x"})));
  CHECK(locally_free_on_punctured_spectrum(k(r3)));
}
