#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace stanley {

/// Point of N^n. Doubles as the monomial x^v and as an element of the
/// characteristic poset. Coordinates are 0-based in code; user-facing text
/// and file formats use the 1-based variable names x1..xn.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries);

  static ExponentVector zero(int n);
  static ExponentVector unit(int n, int var);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_squarefree() const;
  std::vector<int> support() const;

  /// Componentwise order; as monomials this is divisibility.
  bool leq(const ExponentVector& rhs) const;
  bool divides(const ExponentVector& rhs) const { return leq(rhs); }

  /// Copy with entry `var` moved by `delta` (result must stay non-negative).
  ExponentVector shifted(int var, int delta) const;
  ExponentVector capped(const ExponentVector& cap) const;

  bool operator==(const ExponentVector&) const = default;
  auto operator<=>(const ExponentVector&) const = default;  // lexicographic

  std::string to_string() const;        // "(2,1,0)"
  std::string monomial_string() const;  // "x1^2*x2"; "1" for the zero vector

 private:
  std::vector<int> entries_;
};

/// Componentwise maximum; as monomials this is the lcm.
ExponentVector join(const ExponentVector& a, const ExponentVector& b);

/// Advances cur through the box [lo, hi] in lexicographic order; returns
/// false once cur was the last point.
bool next_in_box(ExponentVector& cur, const ExponentVector& lo, const ExponentVector& hi);

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

}  // namespace stanley
