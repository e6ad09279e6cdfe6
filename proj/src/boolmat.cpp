#include "mingens/boolmat.hpp"

#include <algorithm>
#include <omp.h>
#include <stdexcept>

#include "mingens/exec.hpp"

namespace mingens {

int set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
  return omp_get_max_threads();
}

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range: " + std::to_string(n));
}

void check_same(const BoolMat& a, const BoolMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

BoolVec::BoolVec(Word bits, int n) : bits_(bits), n_(n) {
  check_dim(n);
  if (!is_subset(bits, low_mask(n))) throw std::invalid_argument("bits above dimension");
}

BoolVec BoolVec::vec(Word x, int n) {
  if (!is_subset(x, low_mask(n))) throw std::out_of_range("vec: value out of range");
  return {x, n};
}

std::string BoolVec::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int j = 0; j < n_; ++j)
    if ((*this)[j]) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

BoolMat::BoolMat(int n) : n_(n) { check_dim(n); }

BoolMat::BoolMat(int n, std::span<const Word> rows) : n_(n) {
  check_dim(n);
  if (rows.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row count != n");
  for (int i = 0; i < n; ++i) set_row(i, rows[static_cast<std::size_t>(i)]);
}

BoolMat::BoolMat(int n, std::initializer_list<Word> rows)
    : BoolMat(n, std::span<const Word>(rows.begin(), rows.size())) {}

BoolMat BoolMat::identity(int n) {
  BoolMat a(n);
  for (int i = 0; i < n; ++i) a.rows_[static_cast<std::size_t>(i)] = Word{1} << (n - 1 - i);
  return a;
}

BoolMat BoolMat::from_bits(std::string_view bits) {
  int n = 0;
  while (static_cast<std::size_t>(n * n) < bits.size()) ++n;
  if (static_cast<std::size_t>(n * n) != bits.size() || n == 0)
    throw std::invalid_argument("bit string length is not a positive square");
  BoolMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      char c = bits[static_cast<std::size_t>(i * n + j)];
      if (c != '0' && c != '1') throw std::invalid_argument("bit string must use 0 and 1");
      a.set(i, j, c == '1');
    }
  return a;
}

BoolMat BoolMat::from_lines(std::span<const std::string> lines) {
  int n = static_cast<int>(lines.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  std::string all;
  for (const auto& l : lines) {
    if (static_cast<int>(l.size()) != n) throw std::invalid_argument("matrix is not square");
    all += l;
  }
  return from_bits(all);
}

void BoolMat::set_row(int i, Word r) {
  if (!is_subset(r, low_mask(n_))) throw std::invalid_argument("row has bits above dimension");
  rows_[static_cast<std::size_t>(i)] = r;
}

void BoolMat::set(int i, int j, bool v) {
  Word bit = Word{1} << (n_ - 1 - j);
  auto& r = rows_[static_cast<std::size_t>(i)];
  r = v ? (r | bit) : (r & ~bit);
}

Word BoolMat::col(int j) const {
  Word v = 0;
  for (int i = 0; i < n_; ++i) v = (v << 1) | static_cast<Word>(get(i, j));
  return v;
}

int BoolMat::popcount() const {
  int c = 0;
  for (Word r : rows()) c += std::popcount(r);
  return c;
}

BoolMat BoolMat::transpose() const {
  BoolMat t(n_);
  for (int j = 0; j < n_; ++j) t.rows_[static_cast<std::size_t>(j)] = col(j);
  return t;
}

std::string BoolMat::to_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i) s += row_vec(i).to_string();
  return s;
}

std::string BoolMat::to_pretty() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    s += row_vec(i).to_string();
    s += '\n';
  }
  return s;
}

std::strong_ordering operator<=>(const BoolMat& a, const BoolMat& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int i = 0; i < a.n_; ++i)
    if (auto c = a.row(i) <=> b.row(i); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t BoolMat::hash() const {
  // splitmix-style mixing over the live rows
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (Word r : rows()) {
    h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

BoolMat operator*(const BoolMat& a, const BoolMat& b) {
  check_same(a, b);
  const int n = a.dim();
  BoolMat c(n);
  for (int i = 0; i < n; ++i) {
    Word r = a.row(i), acc = 0;
    while (r) {
      int bit = std::countr_zero(r);
      acc |= b.row(n - 1 - bit);
      r &= r - 1;
    }
    c.set_row(i, acc);
  }
  return c;
}

BoolMat mat_mul(const BoolMat& a, const BoolMat& b) { return a * b; }

namespace {

constexpr std::size_t kRowSpaceCap = std::size_t{1} << 22;

std::vector<Word> span_of(std::span<const Word> rows) {
  std::vector<Word> elems{0};
  for (Word r : rows) {
    if (r == 0 || std::binary_search(elems.begin(), elems.end(), r)) continue;
    std::size_t sz = elems.size();
    for (std::size_t k = 0; k < sz; ++k) elems.push_back(elems[k] | r);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.size() > kRowSpaceCap) throw std::length_error("row space too large to materialise");
  }
  return elems;
}

}  // namespace

std::vector<Word> irreducible_rows(std::span<const Word> rows) {
  std::vector<Word> distinct(rows.begin(), rows.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Word> out;
  for (Word r : distinct) {
    if (r == 0) continue;
    Word below = 0;
    for (Word s : distinct)
      if (s != r && is_subset(s, r)) below |= s;
    if (below != r) out.push_back(r);
  }
  return out;
}

RowSpace::RowSpace(std::span<const Word> rows, int n)
    : n_(n), elements_(span_of(rows)), basis_(irreducible_rows(rows)) {}

RowSpace::RowSpace(const BoolMat& a) : RowSpace(a.rows(), a.dim()) {}

bool RowSpace::contains(Word v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

bool RowSpace::subset_of(const RowSpace& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::size_t SmallRowSpace::size() const {
  std::size_t c = 0;
  for (Word w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SmallRowSpace::subset_of(const SmallRowSpace& o) const {
  for (std::size_t k = 0; k < 4; ++k)
    if (!is_subset(bits[k], o.bits[k])) return false;
  return true;
}

SmallRowSpace small_row_space(std::span<const Word> rows, int n) {
  if (n > 8) throw std::invalid_argument("small_row_space needs n <= 8");
  SmallRowSpace s;
  s.add(0);
  std::array<Word, 256> elems{};
  std::size_t count = 1;
  for (Word r : rows) {
    if (s.has(r)) continue;
    std::size_t sz = count;
    for (std::size_t k = 0; k < sz; ++k) {
      Word u = elems[k] | r;
      if (!s.has(u)) {
        s.add(u);
        elems[count++] = u;
      }
    }
  }
  return s;
}

SmallRowSpace small_row_space(const BoolMat& a) { return small_row_space(a.rows(), a.dim()); }

std::size_t SmallRowSpaceHash::operator()(const SmallRowSpace& s) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Word w : s.bits) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

RowSpace row_space(const BoolMat& a) { return RowSpace(a); }

std::vector<BoolVec> row_basis(const BoolMat& a) {
  std::vector<BoolVec> out;
  for (Word r : irreducible_rows(a.rows())) out.emplace_back(r, a.dim());
  return out;
}

std::vector<BoolVec> column_basis(const BoolMat& a) { return row_basis(a.transpose()); }

bool contains(const BoolMat& a, const BoolMat& b) {
  check_same(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (!is_subset(b.row(i), a.row(i))) return false;
  return true;
}

bool contains(const BoolVec& a, const BoolVec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return b.contained_in(a);
}

bool rows_trim(std::span<const Word> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && is_subset(rows[i], rows[j])) return false;
  }
  return true;
}

bool rows_reduced(std::span<const Word> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    Word u = 0;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && is_subset(rows[j], rows[i])) u |= rows[j];
    if (u == rows[i]) return false;
  }
  return true;
}

bool is_row_trim(const BoolMat& a) { return rows_trim(a.rows()); }
bool is_column_trim(const BoolMat& a) { return is_row_trim(a.transpose()); }
bool is_trim(const BoolMat& a) { return is_row_trim(a) && is_column_trim(a); }
bool is_row_reduced(const BoolMat& a) { return rows_reduced(a.rows()); }
bool is_column_reduced(const BoolMat& a) { return is_row_reduced(a.transpose()); }
bool is_reduced(const BoolMat& a) { return is_row_reduced(a) && is_column_reduced(a); }

BoolMat greedy_left_multiplier(const BoolMat& a, const BoolMat& b) {
  check_same(a, b);
  const int n = a.dim();
  BoolMat c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_subset(b.row(j), a.row(i))) c.set(i, j, true);
  return c;
}

BoolMat greedy_right_multiplier(const BoolMat& a, const BoolMat& b) {
  return greedy_left_multiplier(a.transpose(), b.transpose()).transpose();
}

namespace {

// Kuhn's augmenting paths on row i -> columns in rows[i].
bool augment(int i, std::span<const Word> rows, int n, std::vector<int>& match_col, Word& seen) {
  Word r = rows[static_cast<std::size_t>(i)];
  while (r) {
    int bit = std::countr_zero(r);
    r &= r - 1;
    int j = n - 1 - bit;
    Word mask = Word{1} << j;
    if (seen & mask) continue;
    seen |= mask;
    int& m = match_col[static_cast<std::size_t>(j)];
    if (m < 0 || augment(m, rows, n, match_col, seen)) {
      m = i;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_hall(const BoolMat& a) {
  const int n = a.dim();
  std::vector<int> match_col(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Word seen = 0;
    if (!augment(i, a.rows(), n, match_col, seen)) return false;
  }
  return true;
}

std::vector<Word> core(const BoolMat& a) {
  std::vector<Word> out;
  for (Word r : a.rows())
    if (std::popcount(r) >= 2) out.push_back(r);
  return out;
}

int deficiency(const BoolMat& a) {
  if (!is_row_trim(a)) throw std::invalid_argument("deficiency needs a row-trim matrix");
  auto c = core(a);
  if (c.size() > 24) throw std::length_error("core too large for subset search");
  int best = 0;
  const std::uint32_t total = std::uint32_t{1} << c.size();
  for (std::uint32_t s = 1; s < total; ++s) {
    int k = std::popcount(s);
    if (k <= best) continue;
    Word u = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if ((s >> i) & 1U) u |= c[i];
    if (std::popcount(u) < k) best = k;
  }
  return best;
}

bool is_permutation(const BoolMat& a) {
  Word seen = 0;
  for (Word r : a.rows()) {
    if (std::popcount(r) != 1 || (seen & r)) return false;
    seen |= r;
  }
  return true;
}

bool is_reflexive(const BoolMat& a) { return contains(a, BoolMat::identity(a.dim())); }

BoolMat elementary(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("elementary: bad indices");
  BoolMat e = BoolMat::identity(n);
  e.set(i, j, true);
  return e;
}

BoolMat permutation_matrix(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  BoolMat p(n);
  for (int i = 0; i < n; ++i) p.set(i, perm[static_cast<std::size_t>(i)], true);
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  return p;
}

Word permute_bits(Word v, int n, std::span<const int> perm) {
  Word out = 0;
  for (int j = 0; j < n; ++j)
    if ((v >> (n - 1 - j)) & 1U) out |= Word{1} << (n - 1 - perm[static_cast<std::size_t>(j)]);
  return out;
}

BoolMat permute_columns(const BoolMat& a, std::span<const int> perm) {
  BoolMat out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out.set_row(i, permute_bits(a.row(i), a.dim(), perm));
  return out;
}

BoolMat conjugate(const BoolMat& a, std::span<const int> perm) {
  BoolMat out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.set_row(perm[static_cast<std::size_t>(i)], permute_bits(a.row(i), a.dim(), perm));
  return out;
}

Word pack(const BoolMat& a) {
  if (a.dim() > 8) throw std::invalid_argument("pack needs n <= 8");
  Word w = 0;
  for (Word r : a.rows()) w = (w << a.dim()) | r;
  return w;
}

BoolMat unpack(Word bits, int n) {
  if (n > 8) throw std::invalid_argument("unpack needs n <= 8");
  BoolMat a(n);
  for (int i = n - 1; i >= 0; --i) {
    a.set_row(i, bits & low_mask(n));
    bits >>= n;
  }
  return a;
}

}  // namespace mingens
