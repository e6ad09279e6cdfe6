#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mingens {

inline constexpr int kMaxDim = 64;

using Word = std::uint64_t;

// Mask with the low n bits set.
constexpr Word low_mask(int n) { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

constexpr bool is_subset(Word a, Word b) { return (a & ~b) == 0; }

// Vector in B^n. Column j (0-based) is bit n-1-j, so num() reads the vector
// left to right as a binary number.
class BoolVec {
 public:
  BoolVec() = default;
  BoolVec(Word bits, int n);

  static BoolVec vec(Word x, int n);  // throws on x >= 2^n
  Word num() const { return bits_; }
  int dim() const { return n_; }
  bool operator[](int j) const { return (bits_ >> (n_ - 1 - j)) & 1U; }
  int popcount() const { return std::popcount(bits_); }
  bool contained_in(const BoolVec& w) const { return is_subset(bits_, w.bits_); }
  std::string to_string() const;

  friend bool operator==(const BoolVec&, const BoolVec&) = default;
  friend auto operator<=>(const BoolVec& a, const BoolVec& b) { return a.bits_ <=> b.bits_; }

 private:
  Word bits_ = 0;
  int n_ = 0;
};

// n x n boolean matrix, one word per row.
class BoolMat {
 public:
  BoolMat() = default;
  explicit BoolMat(int n);
  BoolMat(int n, std::span<const Word> rows);
  BoolMat(int n, std::initializer_list<Word> rows);

  static BoolMat identity(int n);
  static BoolMat zero(int n) { return BoolMat(n); }
  // Row-major string of n*n characters from {0,1}.
  static BoolMat from_bits(std::string_view bits);
  // n lines of n characters.
  static BoolMat from_lines(std::span<const std::string> lines);

  int dim() const { return n_; }
  Word row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  void set_row(int i, Word r);
  bool get(int i, int j) const { return (row(i) >> (n_ - 1 - j)) & 1U; }
  void set(int i, int j, bool v);
  // Column j as a number with the top row most significant.
  Word col(int j) const;
  std::span<const Word> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  BoolVec row_vec(int i) const { return {row(i), n_}; }
  int popcount() const;

  BoolMat transpose() const;
  std::string to_string() const;             // row-major bit string
  std::string to_pretty() const;             // one line per row

  friend bool operator==(const BoolMat& a, const BoolMat& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  // Compares row 0 first, rows as numbers; this is the order of the
  // row-major bit string.
  friend std::strong_ordering operator<=>(const BoolMat& a, const BoolMat& b);

  std::size_t hash() const;

 private:
  int n_ = 0;
  std::array<Word, kMaxDim> rows_{};
};

BoolMat operator*(const BoolMat& a, const BoolMat& b);
BoolMat mat_mul(const BoolMat& a, const BoolMat& b);

// Elements and basis of the row space. Elements are sorted.
class RowSpace {
 public:
  explicit RowSpace(const BoolMat& a);
  explicit RowSpace(std::span<const Word> rows, int n);

  int dim() const { return n_; }
  std::span<const Word> elements() const { return elements_; }
  std::span<const Word> basis() const { return basis_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Word v) const;
  bool subset_of(const RowSpace& other) const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_;
  std::vector<Word> elements_;
  std::vector<Word> basis_;
};

// Row space of a matrix of dimension at most 8 as a 256-bit set.
struct SmallRowSpace {
  std::array<Word, 4> bits{};

  bool has(Word v) const { return (bits[v >> 6] >> (v & 63)) & 1U; }
  void add(Word v) { bits[v >> 6] |= Word{1} << (v & 63); }
  std::size_t size() const;
  bool subset_of(const SmallRowSpace& o) const;
  bool proper_subset_of(const SmallRowSpace& o) const { return subset_of(o) && bits != o.bits; }
  friend bool operator==(const SmallRowSpace&, const SmallRowSpace&) = default;
  friend auto operator<=>(const SmallRowSpace&, const SmallRowSpace&) = default;
};

SmallRowSpace small_row_space(std::span<const Word> rows, int n);
SmallRowSpace small_row_space(const BoolMat& a);

struct SmallRowSpaceHash {
  std::size_t operator()(const SmallRowSpace& s) const;
};

RowSpace row_space(const BoolMat& a);
std::vector<BoolVec> row_basis(const BoolMat& a);
std::vector<BoolVec> column_basis(const BoolMat& a);
// Union-irreducible rows among the given rows, sorted and deduplicated.
std::vector<Word> irreducible_rows(std::span<const Word> rows);

// True iff b is contained in a, i.e. b_ij = 1 implies a_ij = 1.
bool contains(const BoolMat& a, const BoolMat& b);
bool contains(const BoolVec& a, const BoolVec& b);

bool is_row_trim(const BoolMat& a);
bool is_column_trim(const BoolMat& a);
bool is_trim(const BoolMat& a);
bool is_row_reduced(const BoolMat& a);
bool is_column_reduced(const BoolMat& a);
bool is_reduced(const BoolMat& a);
// Word-level versions used by the enumerators.
bool rows_trim(std::span<const Word> rows);
bool rows_reduced(std::span<const Word> rows);

// C with C_ij = 1 iff row j of b is contained in row i of a. Then C*b == a
// exactly when the row space of a is contained in that of b.
BoolMat greedy_left_multiplier(const BoolMat& a, const BoolMat& b);
// Dual: C with b*C == a exactly when the column space of a is contained in
// that of b.
BoolMat greedy_right_multiplier(const BoolMat& a, const BoolMat& b);

// Contains a permutation matrix; checked by bipartite matching.
bool is_hall(const BoolMat& a);
// Rows with at least two ones.
std::vector<Word> core(const BoolMat& a);
// Largest subset of core rows whose union has fewer ones than the subset
// size; 0 if none. Requires a row-trim matrix.
int deficiency(const BoolMat& a);

bool is_permutation(const BoolMat& a);
bool is_reflexive(const BoolMat& a);
// Identity with one extra 1 at (i, j), i != j, 0-based.
BoolMat elementary(int n, int i, int j);
// Matrix with a 1 at (i, perm[i]).
BoolMat permutation_matrix(std::span<const int> perm);
// Same permutation applied to rows and columns: result_{p(i) p(j)} = a_ij.
BoolMat conjugate(const BoolMat& a, std::span<const int> perm);
// Column permutation: result column p(j) is column j of a.
BoolMat permute_columns(const BoolMat& a, std::span<const int> perm);
Word permute_bits(Word v, int n, std::span<const int> perm);

// Full number of the row-major bit string; only for n <= 8.
Word pack(const BoolMat& a);
BoolMat unpack(Word bits, int n);

}  // namespace mingens

template <>
struct std::hash<mingens::BoolMat> {
  std::size_t operator()(const mingens::BoolMat& a) const noexcept { return a.hash(); }
};
