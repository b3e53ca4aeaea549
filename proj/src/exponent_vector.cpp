#include "stanley/exponent_vector.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace stanley {

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("exponent entries must be non-negative");
}

ExponentVector ExponentVector::zero(int n) {
  if (n < 0) throw std::invalid_argument("vector length must be non-negative");
  return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 0));
}

ExponentVector ExponentVector::unit(int n, int var) {
  ExponentVector v = zero(n);
  if (var < 0 || var >= n) throw std::invalid_argument("variable index out of range");
  v[var] = 1;
  return v;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool ExponentVector::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 1; });
}

std::vector<int> ExponentVector::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i)
    if (entries_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
  return s;
}

bool ExponentVector::leq(const ExponentVector& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("comparing vectors of different length");
  for (int i = 0; i < size(); ++i)
    if ((*this)[i] > rhs[i]) return false;
  return true;
}

ExponentVector ExponentVector::shifted(int var, int delta) const {
  if (var < 0 || var >= size()) throw std::invalid_argument("variable index out of range");
  std::vector<int> e = entries_;
  e[static_cast<std::size_t>(var)] += delta;
  return ExponentVector(std::move(e));  // re-validates non-negativity
}

ExponentVector ExponentVector::capped(const ExponentVector& cap) const {
  if (size() != cap.size()) throw std::invalid_argument("capping with vector of different length");
  std::vector<int> e = entries_;
  for (int i = 0; i < size(); ++i) e[static_cast<std::size_t>(i)] = std::min(e[static_cast<std::size_t>(i)], cap[i]);
  return ExponentVector(std::move(e));
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("joining vectors of different length");
  std::vector<int> e(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) e[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return ExponentVector(std::move(e));
}

bool next_in_box(ExponentVector& cur, const ExponentVector& lo, const ExponentVector& hi) {
  for (int j = cur.size() - 1; j >= 0; --j) {
    if (cur[j] < hi[j]) {
      ++cur[j];
      return true;
    }
    cur[j] = lo[j];
  }
  return false;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string((*this)[i]);
  }
  s += ')';
  return s;
}

std::string ExponentVector::monomial_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    int e = (*this)[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s.empty() ? "1" : s;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << v.to_string(); }

}  // namespace stanley
