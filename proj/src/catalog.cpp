#include "pdtensor/catalog.hpp"

#include <map>
#include <mutex>

namespace pdtensor {

namespace {

struct Entry {
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
};

const std::map<std::string, Entry, std::less<>>& recipes() {
  static const std::map<std::string, Entry, std::less<>> table = {
      {"R1", {{"x", "y"}, {"x*y"}}},
      {"R2", {{"x", "y"}, {"x^2", "x*y"}}},
      {"R3", {{"x", "y", "z", "w"}, {"x*y"}}},
      {"R4", {{"x", "y", "z"}, {"x^2"}}},
      {"R5", {{"x", "y", "z", "w"}, {"x^2", "x*y", "y^2"}}},
      {"R6", {{"x", "y", "z"}, {"x*y - z^2"}}},
  };
  return table;
}

const Entry& recipe(std::string_view id) {
  auto it = recipes().find(id);
  if (it == recipes().end()) throw AlgebraError("unknown catalog ring '" + std::string(id) + "'");
  return it->second;
}

}  // namespace

RingPtr catalog_ring(std::string_view id) {
  static std::mutex mutex;
  static std::map<std::string, RingPtr, std::less<>> built;
  const Entry& e = recipe(id);
  std::lock_guard lock(mutex);
  auto it = built.find(id);
  if (it != built.end()) return it->second;
  RingPtr r = quotient_ring(Field::rationals(), e.vars, e.ideal);
  built.emplace(std::string(id), r);
  return r;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, e] : recipes()) ids.push_back(id);
  return ids;
}

std::string catalog_description(std::string_view id) {
  const Entry& e = recipe(id);
  std::string s = "QQ[";
  for (std::size_t i = 0; i < e.vars.size(); ++i) s += (i ? "," : "") + e.vars[i];
  s += "]/(";
  for (std::size_t i = 0; i < e.ideal.size(); ++i) s += (i ? ", " : "") + e.ideal[i];
  return s + ")";
}

PresentedModule cyclic_from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(ring->parse(g));
  return PresentedModule::cyclic(ring, polys);
}

oracle::Module to_oracle(const PresentedModule& m) {
  oracle::Module out;
  out.ring.ambient = m.ring()->ambient();
  out.ring.ideal = m.ring()->ideal_basis();
  out.twists = m.twists();
  for (const auto& r : m.relations()) {
    out.relations.push_back(vec::to_components(r, m.num_generators(), out.ring.ambient));
  }
  return out;
}

}  // namespace pdtensor
