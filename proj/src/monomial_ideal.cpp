#include "stanley/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stanley {

MonomialIdeal::MonomialIdeal(int var_count, std::vector<ExponentVector> generators)
    : n_(var_count), gens_(std::move(generators)) {
  if (n_ < 1) throw std::invalid_argument("variable count must be at least 1");
  if (gens_.empty()) throw std::invalid_argument("a monomial ideal needs at least one generator");
  for (const auto& v : gens_) {
    if (v.size() != n_) throw std::invalid_argument("generator length differs from variable count");
    if (v.is_zero()) throw std::invalid_argument("the unit ideal is not supported");
  }
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  std::vector<ExponentVector> kept;
  for (const auto& v : gens_) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const ExponentVector& u) { return u != v && u.leq(v); });
    if (!redundant) kept.push_back(v);
  }
  gens_ = std::move(kept);
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  if (m.size() != n_) throw std::invalid_argument("monomial length differs from variable count");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& v) { return v.leq(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const ExponentVector& v) { return v.is_squarefree(); });
}

MonomialIdeal minimalize(int var_count, std::vector<ExponentVector> generators) {
  return MonomialIdeal(var_count, std::move(generators));
}

MonomialIdeal minimalize(std::vector<ExponentVector> generators) {
  if (generators.empty()) throw std::invalid_argument("a monomial ideal needs at least one generator");
  int n = generators.front().size();
  return MonomialIdeal(n, std::move(generators));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& v : ideal.generators()) {
    std::vector<int> e(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) e[static_cast<std::size_t>(i)] = v[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.var_count(), std::move(gens));
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  std::vector<int> uses(static_cast<std::size_t>(ideal.var_count()), 0);
  for (const auto& v : ideal.generators())
    for (int j = 0; j < v.size(); ++j)
      if (v[j] > 0 && ++uses[static_cast<std::size_t>(j)] > 1) return false;
  return true;
}

ExponentVector lcm_exponent(const MonomialIdeal& ideal) {
  ExponentVector g = ExponentVector::zero(ideal.var_count());
  for (const auto& v : ideal.generators()) g = join(g, v);
  return g;
}

std::string render(const MonomialIdeal& ideal) {
  std::string s = "(";
  bool first = true;
  for (const auto& v : ideal.generators()) {
    if (!first) s += ',';
    first = false;
    s += v.monomial_string();
  }
  s += ')';
  return s;
}

}  // namespace stanley
