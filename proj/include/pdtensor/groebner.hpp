#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pdtensor/free_module.hpp"

namespace pdtensor {

/// A computation needed work above the active degree cap.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, int bound) : std::runtime_error(what), bound_(bound) {}
  int bound() const { return bound_; }

 private:
  int bound_;
};

/// Per-thread engine limits. High-level operations consult these so that a
/// session task can bound its whole call tree without threading a parameter.
struct EngineLimits {
  std::optional<int> degree_cap;
};

EngineLimits& engine_limits();

class ScopedEngineLimits {
 public:
  explicit ScopedEngineLimits(EngineLimits limits) : saved_(engine_limits()) { engine_limits() = limits; }
  ~ScopedEngineLimits() { engine_limits() = saved_; }
  ScopedEngineLimits(const ScopedEngineLimits&) = delete;
  ScopedEngineLimits& operator=(const ScopedEngineLimits&) = delete;

 private:
  EngineLimits saved_;
};

/// Reduced Groebner basis of a homogeneous ideal I of S. Module computations
/// over S/I keep every vector in normal form modulo I * F.
struct IdealReducer {
  PolyRingPtr ring;
  std::vector<std::vector<Term>> polys;  // monic, decreasing
  std::vector<Monomial> leads;

  bool empty() const { return polys.empty(); }
  /// Normal form of a polynomial modulo I.
  Polynomial reduce(const Polynomial& p) const;
  /// Normal form of every component modulo I.
  FreeVector reduce(FreeVector v, const ModuleOrder& order) const;
};

/// Builds the reducer from arbitrary homogeneous generators of I.
std::shared_ptr<const IdealReducer> make_ideal_reducer(const PolyRingPtr& ring,
                                                       const std::vector<Polynomial>& gens);

/// Incremental Buchberger engine for homogeneous submodules of a graded free
/// module over S or S/I.
///
/// Work is processed degree by degree (pairs before inputs in each degree), so
/// an input is reported redundant exactly when it lies in the span of the
/// earlier inputs in its own degree. When tracking is enabled every basis
/// element carries the combination of inputs that produced it, and every
/// reduction to zero records a syzygy of the inputs in the representation module.
class GroebnerEngine {
 public:
  struct Options {
    bool track = false;
    bool newest_first = false;
  };

  struct Element {
    FreeVector v;
    FreeVector rep;
    int degree = 0;
  };

  struct Syzygy {
    int degree = 0;
    FreeVector rep;
  };

  GroebnerEngine(ModuleOrder order, std::shared_ptr<const IdealReducer> ideal, Options options,
                 ModuleOrder rep_order = {});

  /// Queues an input. `rep` is its representation (ignored without tracking);
  /// nullopt means the input is a relation that maps to zero in the
  /// representation module. Returns the input index.
  std::size_t add_input(FreeVector v, std::optional<FreeVector> rep = std::nullopt);

  /// Processes all queued work of degree <= `up_to` (everything when nullopt).
  void run(std::optional<int> up_to = std::nullopt);

  /// True when work above the last `run` limit remains.
  bool pending() const { return !pairs_.empty() || !inputs_.empty(); }
  std::optional<int> next_degree() const;

  const std::vector<Element>& basis() const { return elements_; }
  const std::vector<Syzygy>& syzygies() const { return syzygies_; }
  /// For each input: index of the basis element it produced, or nullopt.
  const std::vector<std::optional<std::size_t>>& input_results() const { return input_results_; }

  /// Full normal form. When tracking, `rep` receives the representation
  /// correction: v = NF + sum rep_k * input_k (mod I). `step` observes each
  /// reduction v -= c * m * basis[k].
  FreeVector reduce(FreeVector v, FreeVector* rep = nullptr,
                    const std::function<void(std::size_t, const FieldScalar&, const Monomial&)>& step = {}) const;

  /// Tail-reduces every basis element by the others; leads are untouched.
  void interreduce();

  const ModuleOrder& order() const { return order_; }
  const ModuleOrder& rep_order() const { return rep_order_; }
  const std::shared_ptr<const IdealReducer>& ideal() const { return ideal_; }

 private:
  struct Pair {
    std::uint64_t serial;
    std::uint32_t i;
    std::int64_t j;  // >= 0 basis element, < 0 ideal generator (-j-1)
    Monomial lcm;
  };
  struct Input {
    std::uint64_t serial;
    std::size_t index;
    FreeVector v;
    std::optional<FreeVector> rep;
  };
  struct Lead {
    Monomial mono;
    std::uint32_t comp;
    std::uint32_t mask;
  };

  std::optional<std::size_t> find_reducer(const Monomial& m, std::uint32_t comp, std::uint32_t mask) const;
  std::optional<std::size_t> find_ideal_reducer(const Monomial& m, std::uint32_t mask) const;
  bool chain_skip(const Pair& p, std::uint32_t comp) const;
  void process_pair(const Pair& p, int degree);
  void process_input(Input& in, int degree);
  void add_element(FreeVector v, FreeVector rep, int degree);
  void record_syzygy(int degree, FreeVector rep);
  void subtract_ideal_multiple(FreeVector& v, std::size_t start, const FieldScalar& c, const Monomial& m,
                               std::size_t h, std::uint32_t comp) const;

  ModuleOrder order_;
  std::shared_ptr<const IdealReducer> ideal_;
  Options options_;
  ModuleOrder rep_order_;
  std::vector<std::uint32_t> ideal_masks_;

  std::vector<Element> elements_;
  std::vector<Lead> leads_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::vector<Syzygy> syzygies_;
  std::vector<std::optional<std::size_t>> input_results_;

  std::map<int, std::vector<Pair>> pairs_;
  std::map<int, std::vector<Input>> inputs_;
  std::uint64_t serial_ = 0;
};

std::uint32_t divisibility_mask(const Monomial& m);

/// Reduced Groebner basis of a submodule.
struct GroebnerBasis {
  ModuleOrder order;
  std::vector<FreeVector> generators;
  bool reduced = false;
  std::shared_ptr<const IdealReducer> ideal;  // null: submodule over S
};

struct NormalFormResult {
  FreeVector remainder;
  std::vector<Polynomial> quotients;
};

NormalFormResult normal_form(const FreeVector& v, const GroebnerBasis& basis, const PolyRingPtr& ring);

struct BuchbergerOptions {
  bool newest_first = false;
  std::optional<int> degree_cap;
};

/// Throws AlgebraError on inhomogeneous input and BoundExceeded when the
/// degree cap stops the computation.
GroebnerBasis buchberger(const std::vector<FreeVector>& gens, const ModuleOrder& order,
                         std::shared_ptr<const IdealReducer> ideal = nullptr, BuchbergerOptions options = {});

/// Generators of the module of relations among basis.generators, as vectors in
/// the free module with basis e_k -> generator k (twisted by generator degrees).
std::vector<FreeVector> syzygy_basis(const GroebnerBasis& basis, const PolyRingPtr& ring);

/// Kernel of the map e_k -> columns[k] into F / (relations + I*F). Source
/// twists are `column_degrees`. Returns generators of the kernel (not
/// necessarily minimal), reduced modulo I. `ideal` must be non-null; an
/// empty reducer means S itself.
std::vector<FreeVector> kernel_vectors(const ModuleOrder& target, const std::vector<FreeVector>& columns,
                                       const std::vector<int>& column_degrees,
                                       const std::vector<FreeVector>& relations,
                                       const std::shared_ptr<const IdealReducer>& ideal);

/// Minimal homogeneous generators of the image of span(vectors) in
/// F / (relations + I*F), chosen among the inputs (reduced modulo I).
std::vector<FreeVector> minimal_generators(const std::vector<FreeVector>& vectors, const ModuleOrder& order,
                                           const std::shared_ptr<const IdealReducer>& ideal,
                                           const std::vector<FreeVector>& relations = {});

/// Solves columns * s = v modulo (relations + I*F) for homogeneous v. The
/// truncated basis grows on demand, so repeated queries share work.
class Solver {
 public:
  Solver(ModuleOrder target, std::vector<FreeVector> columns, std::vector<int> column_degrees,
         const std::vector<FreeVector>& relations, std::shared_ptr<const IdealReducer> ideal);
  ~Solver();

  std::optional<FreeVector> solve(const FreeVector& v);
  bool contains(const FreeVector& v);

 private:
  std::shared_ptr<const IdealReducer> ideal_;
  std::unique_ptr<GroebnerEngine> engine_;
};

}  // namespace pdtensor
