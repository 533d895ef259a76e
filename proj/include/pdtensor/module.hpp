#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pdtensor/ring.hpp"

namespace pdtensor {

/// Homogeneous matrix over R between graded free modules: columns are images
/// of the source basis in the target free module F = sum_i R(-target[i]).
class Matrix {
 public:
  Matrix() = default;
  /// Columns are reduced modulo I. Throws unless column j is zero or
  /// homogeneous of weighted degree source[j].
  Matrix(RingPtr ring, std::vector<int> target, std::vector<int> source, std::vector<FreeVector> columns);
  static Matrix from_rows(RingPtr ring, std::vector<int> target, std::vector<int> source,
                          const std::vector<std::vector<Polynomial>>& rows);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& target_twists() const { return target_; }
  const std::vector<int>& source_twists() const { return source_; }
  const std::vector<FreeVector>& columns() const { return columns_; }
  const ModuleOrder& target_order() const { return target_order_; }
  ModuleOrder source_order() const;
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }

  Polynomial entry(std::size_t i, std::size_t j) const;
  /// A * s for s in the source free module.
  FreeVector apply(const FreeVector& s) const;
  /// this * other.
  Matrix compose(const Matrix& other) const;
  /// Dual map between dual free modules; twists are negated.
  Matrix transpose() const;
  bool is_zero() const;
  /// No entry has a constant term.
  bool is_minimal() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<int> target_;
  std::vector<int> source_;
  std::vector<FreeVector> columns_;
  ModuleOrder target_order_;
};

/// Multiplication of a vector by a polynomial, reduced modulo I.
FreeVector scale_by(const FreeVector& v, const Polynomial& p, const ModuleOrder& order, const IdealReducer& ideal);

/// M = coker(A : F1 -> F0) over R with F0 = sum_i R(-twists[i]).
class PresentedModule {
 public:
  PresentedModule() = default;
  /// Relations are reduced modulo I and zero columns dropped. Throws on an
  /// inhomogeneous relation.
  PresentedModule(RingPtr ring, std::vector<int> twists, std::vector<FreeVector> relations);

  static PresentedModule free(RingPtr ring, std::vector<int> twists);
  /// R(-twist)/(gens).
  static PresentedModule cyclic(RingPtr ring, const std::vector<Polynomial>& gens, int twist = 0);
  static PresentedModule residue_field(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& twists() const { return twists_; }
  const std::vector<FreeVector>& relations() const { return relations_; }
  const std::vector<int>& relation_degrees() const { return relation_degrees_; }
  std::size_t num_generators() const { return twists_.size(); }
  const ModuleOrder& order() const { return order_; }
  Matrix presentation() const;

  /// Membership of a vector of F0 in the relation span plus I*F0.
  bool is_zero_element(const FreeVector& v) const;
  /// Cached minimal presentation.
  const PresentedModule& minimal() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::unique_ptr<Solver> solver;
    std::shared_ptr<const PresentedModule> minimal;
  };

  RingPtr ring_;
  std::vector<int> twists_;
  std::vector<FreeVector> relations_;
  std::vector<int> relation_degrees_;
  ModuleOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// Homomorphism source -> target of degree `degree`: generator k of the
/// source goes to images[k] in F0(target), of degree twist_k + degree.
class ModuleMap {
 public:
  /// Checks well-definedness; throws AlgebraError otherwise.
  ModuleMap(PresentedModule source, PresentedModule target, std::vector<FreeVector> images, int degree = 0);
  static ModuleMap identity(const PresentedModule& m);
  static ModuleMap zero(const PresentedModule& source, const PresentedModule& target, int degree = 0);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const std::vector<FreeVector>& images() const { return images_; }
  int degree() const { return degree_; }

  /// Image of a vector of F0(source).
  FreeVector apply(const FreeVector& s) const;

 private:
  PresentedModule source_;
  PresentedModule target_;
  std::vector<FreeVector> images_;
  int degree_ = 0;
};

/// Submodule of F0/(relations) spanned by `gens` (of the given degrees), presented.
PresentedModule subquotient(const RingPtr& ring, const ModuleOrder& ambient, const std::vector<FreeVector>& gens,
                            const std::vector<int>& gen_degrees, const std::vector<FreeVector>& relations);

PresentedModule present_module(RingPtr ring, std::vector<int> twists, std::vector<FreeVector> relations);
PresentedModule minimal_presentation(const PresentedModule& m);
/// M(d): generator twists decrease by d.
PresentedModule shift(const PresentedModule& m, int d);
PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n);
PresentedModule tensor_product(const PresentedModule& m, const PresentedModule& n);

struct HomResult {
  PresentedModule module;
  /// Generators as vectors of sum_k F0(N) (block k = image of generator k of M).
  std::vector<FreeVector> generators;
  std::vector<int> degrees;
  ModuleMap map(std::size_t i) const;
  PresentedModule source;
  PresentedModule target;
};
HomResult hom_module(const PresentedModule& m, const PresentedModule& n);
PresentedModule dual(const PresentedModule& m);

PresentedModule auslander_transpose(const PresentedModule& m);

struct KernelImage {
  PresentedModule kernel;
  PresentedModule image;
  PresentedModule cokernel;
  /// Generators of the kernel as vectors of F0(source).
  std::vector<FreeVector> kernel_generators;
};
KernelImage map_kernel_image(const ModuleMap& f);
/// Generators (in F0(source)) of the kernel of f, not reduced to a presentation.
std::vector<FreeVector> kernel_generators(const ModuleMap& f);

bool is_zero(const PresentedModule& m);
struct FreeInfo {
  bool free = false;
  std::size_t rank = 0;
  std::vector<int> twists;
};
FreeInfo is_free(const PresentedModule& m);

/// True iff multiplication by r on M is injective. Throws for r of degree <= 0.
bool nzd_test(const Polynomial& r, const PresentedModule& m);

/// Generators of ann(M) as an ideal of R.
std::vector<Polynomial> annihilator(const PresentedModule& m);

struct BidualityResult {
  PresentedModule bidual;
  /// Images of the generators of M in the ambient free module of M**.
  std::vector<FreeVector> evaluation;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};
BidualityResult biduality_reflexive(const PresentedModule& m);

struct TraceResult {
  PresentedModule trace;
  /// Generators of the trace as vectors of F0(T).
  std::vector<FreeVector> embedding;
  bool equals_target = false;
  /// Number of Hom generators used; M^r surjects onto T when equals_target.
  std::size_t hom_generators = 0;
};
TraceResult trace_submodule(const PresentedModule& m, const PresentedModule& t);

}  // namespace pdtensor
