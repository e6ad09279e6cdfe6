#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mingens {

enum class Flavor { min_plus, max_plus };
std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);  // "min" or "max"

// Element of {0..t} plus the absorbing bottom (inf for min-plus, -inf for
// max-plus), which is stored as kBottom.
using TropValue = int;
inline constexpr TropValue kBottom = -1;

TropValue trop_add(Flavor f, TropValue a, TropValue b);
TropValue trop_mul(int t, TropValue a, TropValue b);
std::string format_value(Flavor f, TropValue v);
TropValue parse_value(Flavor f, int t, const std::string& s);

// 2x2 matrix over the thresholded semiring, row-major.
class TropMat {
 public:
  TropMat() = default;
  TropMat(Flavor f, int t, std::array<TropValue, 4> e);
  static TropMat identity(Flavor f, int t);

  Flavor flavor() const { return f_; }
  int threshold() const { return t_; }
  TropValue at(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }
  const std::array<TropValue, 4>& entries() const { return e_; }
  std::string to_string() const;  // four tokens
  std::size_t hash() const;

  friend bool operator==(const TropMat&, const TropMat&) = default;

 private:
  Flavor f_ = Flavor::min_plus;
  int t_ = 0;
  std::array<TropValue, 4> e_{};
};

// Throws on flavor or threshold mismatch.
TropMat operator*(const TropMat& a, const TropMat& b);

// A(i) for i in {inf, 0..t}, then B, C.
std::vector<TropMat> minplus_generators(int t);
// X(i) for i in {-inf, 0..t}, then Y, Z, W(j,k) for 1 <= j <= k <= t.
std::vector<TropMat> maxplus_generators(int t);
std::size_t minplus_generator_count(int t);
std::size_t maxplus_generator_count(int t);

// All (t+2)^4 matrices.
std::vector<TropMat> all_trop_matrices(Flavor f, int t);

using TropRow = std::vector<TropValue>;

// Distinct rows that are not max of scalar multiples of the other rows.
// Rows of bottoms are dropped. Sorted.
std::vector<TropRow> maxplus_row_basis(const std::vector<TropRow>& rows, int t);
std::vector<TropRow> maxplus_row_basis(const TropMat& a);

// Number of distinct rows a * row, a ranging over the max-plus semiring.
std::size_t scalar_multiple_count(const TropRow& row, int t);

}  // namespace mingens

template <>
struct std::hash<mingens::TropMat> {
  std::size_t operator()(const mingens::TropMat& a) const noexcept { return a.hash(); }
};
