#include "mingens/zn.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mingens {

Residue mod(Residue a, Residue n) {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

ZnMat::ZnMat(int k, Residue n) : k_(k), n_(n), e_(static_cast<std::size_t>(k * k), 0) {
  if (k < 1) throw std::invalid_argument("matrix dimension must be positive");
  if (n < 1) throw std::invalid_argument("modulus must be positive");
}

ZnMat::ZnMat(int k, Residue n, std::vector<Residue> entries) : ZnMat(k, n) {
  if (entries.size() != e_.size()) throw std::invalid_argument("wrong number of entries");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = mod(entries[i], n);
}

ZnMat ZnMat::identity(int k, Residue n) {
  ZnMat m(k, n);
  for (int i = 0; i < k; ++i) m.set(i, i, 1);
  return m;
}

ZnMat ZnMat::diagonal(Residue n, const std::vector<Residue>& d) {
  ZnMat m(static_cast<int>(d.size()), n);
  for (std::size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return m;
}

void ZnMat::set(int i, int j, Residue v) { e_[idx(i, j)] = mod(v, n_); }

bool ZnMat::is_diagonal() const {
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

std::string ZnMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) os << (j ? " " : "") << at(i, j);
    os << '\n';
  }
  return os.str();
}

std::size_t ZnMat::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 31 + static_cast<std::size_t>(k_);
  for (Residue v : e_) h = h * 1'000'003 + static_cast<std::size_t>(v);
  return h;
}

ZnMat operator*(const ZnMat& a, const ZnMat& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus())
    throw std::invalid_argument("product of matrices with different shape or modulus");
  const int k = a.dim();
  const Residue n = a.modulus();
  ZnMat c(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Residue s = 0;
      for (int l = 0; l < k; ++l) s = (s + a.at(i, l) * b.at(l, j)) % n;
      c.set(i, j, s);
    }
  return c;
}

Residue determinant(const ZnMat& a) {
  const int k = a.dim();
  const Residue n = a.modulus();
  if (k > 8) throw std::invalid_argument("determinant needs k <= 8");
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  Residue det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    Residue term = 1;
    for (int i = 0; i < k && term; ++i) term = term * a.at(i, p[static_cast<std::size_t>(i)]) % n;
    det = mod(det + (inversions % 2 ? -term : term), n);
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

bool is_unit_matrix(const ZnMat& a) { return std::gcd(determinant(a), a.modulus()) == 1; }

namespace {

// x with a*x = 1 mod n, gcd(a, n) = 1.
Residue inverse(Residue a, Residue n) {
  Residue r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
  while (r1) {
    Residue q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw std::invalid_argument("not a unit");
  return mod(s0, n);
}

}  // namespace

std::vector<Residue> prime_divisors(Residue n) {
  if (n < 1) throw std::invalid_argument("prime_divisors needs n >= 1");
  std::vector<Residue> out;
  for (Residue p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Residue coprime_scaler(Residue a, Residue n) {
  if (n < 2) throw std::invalid_argument("coprime_scaler needs n >= 2");
  a = mod(a, n);
  if (a == 0) return 1;
  const Residue d = std::gcd(a, n);
  const Residue m = n / d;
  // a/d is invertible mod n/d
  Residue x = m == 1 ? 1 : inverse(a / d, m);
  Residue y = 1;
  for (Residue p : prime_divisors(n))
    if (x % p != 0 && m % p != 0) y *= p;
  return mod(x + m * y, n);
}

namespace {

class Diagonaliser {
 public:
  explicit Diagonaliser(const ZnMat& a)
      : w_(a), l_(ZnMat::identity(a.dim(), a.modulus())), r_(ZnMat::identity(a.dim(), a.modulus())),
        k_(a.dim()), n_(a.modulus()) {
    budget_ = 16 * static_cast<std::size_t>(k_ * k_) * static_cast<std::size_t>(n_ + 2);
  }

  DiagonalForm run() {
    for (int p = 0; p < k_; ++p) {
      if (!reduce_pivot(p)) break;
      const Residue v = w_.at(p, p);
      const Residue u = coprime_scaler(v, n_);
      if (u != 1) scale_row(p, u);
    }
    sort_diagonal();
    return {w_, l_, r_, steps_};
  }

 private:
  void tick() {
    if (++steps_ > budget_) throw std::runtime_error("diagonal form exceeded its step budget");
  }

  // row i += c * row j
  void add_row(int i, int j, Residue c) {
    tick();
    for (int x = 0; x < k_; ++x) w_.set(i, x, w_.at(i, x) + c * w_.at(j, x));
    for (int x = 0; x < k_; ++x) l_.set(x, j, l_.at(x, j) - c * l_.at(x, i));
  }
  // col i += c * col j
  void add_col(int i, int j, Residue c) {
    tick();
    for (int x = 0; x < k_; ++x) w_.set(x, i, w_.at(x, i) + c * w_.at(x, j));
    for (int x = 0; x < k_; ++x) r_.set(j, x, r_.at(j, x) - c * r_.at(i, x));
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    tick();
    for (int x = 0; x < k_; ++x) {
      Residue t = w_.at(i, x);
      w_.set(i, x, w_.at(j, x));
      w_.set(j, x, t);
      t = l_.at(x, i);
      l_.set(x, i, l_.at(x, j));
      l_.set(x, j, t);
    }
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    tick();
    for (int x = 0; x < k_; ++x) {
      Residue t = w_.at(x, i);
      w_.set(x, i, w_.at(x, j));
      w_.set(x, j, t);
      t = r_.at(i, x);
      r_.set(i, x, r_.at(j, x));
      r_.set(j, x, t);
    }
  }
  void scale_row(int i, Residue u) {
    tick();
    const Residue inv = inverse(u, n_);
    for (int x = 0; x < k_; ++x) w_.set(i, x, w_.at(i, x) * u);
    for (int x = 0; x < k_; ++x) l_.set(x, i, l_.at(x, i) * inv);
  }

  // Moves a gcd-chased pivot to (p, p) with zeros elsewhere in row and column p.
  // False when the remaining block is zero.
  bool reduce_pivot(int p) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = p; i < k_; ++i)
        for (int j = p; j < k_; ++j) {
          const Residue v = w_.at(i, j);
          if (v && (bi < 0 || v < w_.at(bi, bj))) bi = i, bj = j;
        }
      if (bi < 0) return false;
      swap_rows(p, bi);
      swap_cols(p, bj);
      const Residue piv = w_.at(p, p);
      bool clean = true;
      for (int i = p + 1; i < k_; ++i) {
        const Residue q = w_.at(i, p) / piv;
        if (q) add_row(i, p, n_ - q % n_);
        if (w_.at(i, p)) clean = false;
      }
      for (int j = p + 1; j < k_; ++j) {
        const Residue q = w_.at(p, j) / piv;
        if (q) add_col(j, p, n_ - q % n_);
        if (w_.at(p, j)) clean = false;
      }
      if (clean) return true;
    }
  }

  void sort_diagonal() {
    auto key = [&](int i) { return w_.at(i, i) == 0 ? n_ : w_.at(i, i); };
    for (int i = 0; i < k_; ++i) {
      int best = i;
      for (int j = i + 1; j < k_; ++j)
        if (key(j) > key(best)) best = j;
      if (best != i) {
        swap_rows(i, best);
        swap_cols(i, best);
      }
    }
  }

  ZnMat w_, l_, r_;
  int k_;
  Residue n_;
  std::size_t steps_ = 0;
  std::size_t budget_ = 0;
};

}  // namespace

DiagonalForm standard_diagonal_form(const ZnMat& a) {
  if (a.modulus() < 2) throw std::invalid_argument("diagonal form needs n >= 2");
  return Diagonaliser(a).run();
}

bool is_standard_diagonal(const ZnMat& d) {
  if (!d.is_diagonal()) return false;
  const Residue n = d.modulus();
  Residue prev = 0;
  for (int i = 0; i < d.dim(); ++i) {
    const Residue v = d.at(i, i);
    const Residue key = v == 0 ? n : v;
    if (n % key != 0) return false;
    if (i > 0 && key > prev) return false;
    prev = key;
  }
  return true;
}

std::vector<ZnMat> xp_generators(Residue n, int k) {
  if (n < 2) throw std::invalid_argument("xp_generators needs n >= 2");
  if (k < 1) throw std::invalid_argument("xp_generators needs k >= 1");
  std::vector<ZnMat> out;
  for (Residue p : prime_divisors(n)) {
    std::vector<Residue> d(static_cast<std::size_t>(k), 1);
    d[0] = p % n;
    out.push_back(ZnMat::diagonal(n, d));
  }
  return out;
}

int relative_rank(Residue n) {
  if (n < 1) throw std::invalid_argument("relative_rank needs n >= 1");
  return static_cast<int>(prime_divisors(n).size());
}

namespace {

std::uint64_t matrix_count(Residue n, int k, std::uint64_t cap) {
  if (n < 1 || k < 1) throw std::invalid_argument("bad modulus or dimension");
  std::uint64_t total = 1;
  for (int i = 0; i < k * k; ++i) {
    if (total > cap / static_cast<std::uint64_t>(n)) throw std::length_error("matrix count exceeds cap");
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

ZnMat decode(std::uint64_t code, Residue n, int k) {
  std::vector<Residue> e(static_cast<std::size_t>(k * k));
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    *it = static_cast<Residue>(code % static_cast<std::uint64_t>(n));
    code /= static_cast<std::uint64_t>(n);
  }
  return {k, n, std::move(e)};
}

}  // namespace

std::vector<ZnMat> enumerate_units(Residue n, int k, std::uint64_t cap, Exec exec) {
  const std::uint64_t total = matrix_count(n, k, cap);
  std::vector<char> unit(total, 0);
  const auto count = static_cast<std::int64_t>(total);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < count; ++c)
      unit[static_cast<std::size_t>(c)] = is_unit_matrix(decode(static_cast<std::uint64_t>(c), n, k));
  } else {
    for (std::int64_t c = 0; c < count; ++c)
      unit[static_cast<std::size_t>(c)] = is_unit_matrix(decode(static_cast<std::uint64_t>(c), n, k));
  }
  std::vector<ZnMat> out;
  for (std::uint64_t c = 0; c < total; ++c)
    if (unit[c]) out.push_back(decode(c, n, k));
  return out;
}

std::vector<ZnMat> all_zn_matrices(Residue n, int k, std::uint64_t cap) {
  const std::uint64_t total = matrix_count(n, k, cap);
  std::vector<ZnMat> out;
  out.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(decode(c, n, k));
  return out;
}

}  // namespace mingens
