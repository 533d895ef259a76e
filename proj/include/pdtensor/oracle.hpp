#pragma once

// Dense degreewise linear algebra over k. Works on graded pieces as finite
// k-vector spaces and shares nothing with the Groebner engine beyond the
// polynomial type, so its answers can cross-check the engine.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "pdtensor/polynomial.hpp"

namespace pdtensor::oracle {

/// S/I given by arbitrary homogeneous generators of I.
struct Ring {
  PolyRingPtr ambient;
  std::vector<Polynomial> ideal;
};

/// coker of the polynomial matrix whose columns are `relations` (each of length twists.size()).
struct Module {
  Ring ring;
  std::vector<int> twists;
  std::vector<std::vector<Polynomial>> relations;
};

Module free_module(const Ring& ring, std::vector<int> twists);
Module cyclic(const Ring& ring, const std::vector<Polynomial>& gens);
Module residue_field(const Ring& ring);
Module direct_sum(const Module& a, const Module& b);
/// Presentation [A (x) 1 | 1 (x) B].
Module tensor(const Module& a, const Module& b);

/// dim_k M_d for d in [from, to].
std::vector<std::int64_t> hilbert_function(const Module& m, int from, int to);

/// dim_k Tor_i(M, N)_d for 0 <= i <= imax and d in [from, to]: result[i][d - from].
std::vector<std::vector<std::int64_t>> tor_dims(const Module& m, const Module& n, int imax, int from, int to);

/// dim_k Hom(M, N)_d for d in [from, to].
std::vector<std::int64_t> hom_dims(const Module& m, const Module& n, int from, int to);

/// dim_k of the kernel of multiplication by r on M in degrees [from, to].
std::vector<std::int64_t> multiplication_kernel_dims(const Module& m, const Polynomial& r, int from, int to);

/// Rank of M_d / (x_1..x_n) M_{d-1} summed over d in [from, to]: mu(M) when the window covers every generator.
std::int64_t generator_count(const Module& m, int from, int to);

}  // namespace pdtensor::oracle
