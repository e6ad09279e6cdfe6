#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mingens/exec.hpp"

namespace mingens {

using Residue = std::int64_t;

// k x k matrix over Z/nZ, row-major, entries in [0, n).
class ZnMat {
 public:
  ZnMat() = default;
  ZnMat(int k, Residue n);
  ZnMat(int k, Residue n, std::vector<Residue> entries);  // reduces mod n
  static ZnMat identity(int k, Residue n);
  static ZnMat diagonal(Residue n, const std::vector<Residue>& d);

  int dim() const { return k_; }
  Residue modulus() const { return n_; }
  Residue at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, Residue v);
  const std::vector<Residue>& entries() const { return e_; }
  bool is_diagonal() const;
  std::string to_string() const;  // k lines of k residues
  std::size_t hash() const;

  friend bool operator==(const ZnMat&, const ZnMat&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * k_ + j); }
  int k_ = 0;
  Residue n_ = 1;
  std::vector<Residue> e_;
};

ZnMat operator*(const ZnMat& a, const ZnMat& b);

Residue mod(Residue a, Residue n);
Residue determinant(const ZnMat& a);
bool is_unit_matrix(const ZnMat& a);

// b coprime to n with a*b = gcd(a, n) mod n; a = 0 gives 1.
Residue coprime_scaler(Residue a, Residue n);

struct DiagonalForm {
  ZnMat diag;
  ZnMat left_unit, right_unit;  // left_unit * diag * right_unit == input
  std::size_t steps = 0;        // elementary operations used
};

// Diagonal form reached by unimodular row and column operations: zeros first,
// then divisors of n in descending order.
DiagonalForm standard_diagonal_form(const ZnMat& a);
bool is_standard_diagonal(const ZnMat& d);

// Distinct prime divisors in increasing order.
std::vector<Residue> prime_divisors(Residue n);
// diag(p mod n, 1, ..., 1) for each prime p dividing n.
std::vector<ZnMat> xp_generators(Residue n, int k);
int relative_rank(Residue n);

// All invertible k x k matrices. Throws when n^(k*k) exceeds cap.
std::vector<ZnMat> enumerate_units(Residue n, int k, std::uint64_t cap = 20'000'000, Exec exec = Exec::parallel);
// All n^(k*k) matrices.
std::vector<ZnMat> all_zn_matrices(Residue n, int k, std::uint64_t cap = 20'000'000);

}  // namespace mingens

template <>
struct std::hash<mingens::ZnMat> {
  std::size_t operator()(const mingens::ZnMat& a) const noexcept { return a.hash(); }
};
