#include "mingens/tropical.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mingens {

std::string to_string(Flavor f) { return f == Flavor::min_plus ? "min" : "max"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "min" || s == "min-plus") return Flavor::min_plus;
  if (s == "max" || s == "max-plus") return Flavor::max_plus;
  throw std::invalid_argument("unknown flavor: " + s);
}

TropValue trop_add(Flavor f, TropValue a, TropValue b) {
  if (a == kBottom) return b;
  if (b == kBottom) return a;
  return f == Flavor::min_plus ? std::min(a, b) : std::max(a, b);
}

TropValue trop_mul(int t, TropValue a, TropValue b) {
  if (a == kBottom || b == kBottom) return kBottom;
  return std::min(t, a + b);
}

std::string format_value(Flavor f, TropValue v) {
  if (v == kBottom) return f == Flavor::min_plus ? "inf" : "-inf";
  return std::to_string(v);
}

TropValue parse_value(Flavor f, int t, const std::string& s) {
  if (s == (f == Flavor::min_plus ? "inf" : "-inf")) return kBottom;
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad tropical value: " + s);
  }
  if (used != s.size() || v < 0 || v > t) throw std::invalid_argument("tropical value out of range: " + s);
  return v;
}

TropMat::TropMat(Flavor f, int t, std::array<TropValue, 4> e) : f_(f), t_(t), e_(e) {
  if (t < 0) throw std::invalid_argument("threshold must be non-negative");
  for (TropValue v : e_)
    if (v != kBottom && (v < 0 || v > t)) throw std::invalid_argument("tropical entry out of range");
}

TropMat TropMat::identity(Flavor f, int t) { return {f, t, {0, kBottom, kBottom, 0}}; }

std::string TropMat::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ' ';
    s += format_value(f_, e_[i]);
  }
  return s;
}

std::size_t TropMat::hash() const {
  std::size_t h = static_cast<std::size_t>(t_) * 2 + (f_ == Flavor::max_plus);
  for (TropValue v : e_) h = h * 131 + static_cast<std::size_t>(v + 1);
  return h;
}

TropMat operator*(const TropMat& a, const TropMat& b) {
  if (a.flavor() != b.flavor() || a.threshold() != b.threshold())
    throw std::invalid_argument("tropical product of matrices over different semirings");
  const Flavor f = a.flavor();
  const int t = a.threshold();
  std::array<TropValue, 4> e{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      e[static_cast<std::size_t>(2 * i + j)] =
          trop_add(f, trop_mul(t, a.at(i, 0), b.at(0, j)), trop_mul(t, a.at(i, 1), b.at(1, j)));
  return {f, t, e};
}

namespace {
void check_t(int t) {
  if (t < 1) throw std::invalid_argument("threshold must be at least 1 (t = 0 is the boolean case)");
}
}  // namespace

std::vector<TropMat> minplus_generators(int t) {
  check_t(t);
  constexpr Flavor f = Flavor::min_plus;
  std::vector<TropMat> g;
  g.emplace_back(f, t, std::array<TropValue, 4>{kBottom, 0, 0, kBottom});
  for (int i = 0; i <= t; ++i) g.emplace_back(f, t, std::array<TropValue, 4>{i, 0, 0, kBottom});
  g.emplace_back(f, t, std::array<TropValue, 4>{1, kBottom, kBottom, 0});
  g.emplace_back(f, t, std::array<TropValue, 4>{kBottom, kBottom, kBottom, 0});
  return g;
}

std::vector<TropMat> maxplus_generators(int t) {
  check_t(t);
  constexpr Flavor f = Flavor::max_plus;
  std::vector<TropMat> g;
  g.emplace_back(f, t, std::array<TropValue, 4>{kBottom, 0, 0, kBottom});
  for (int i = 0; i <= t; ++i) g.emplace_back(f, t, std::array<TropValue, 4>{i, 0, 0, kBottom});
  g.emplace_back(f, t, std::array<TropValue, 4>{1, kBottom, kBottom, 0});
  g.emplace_back(f, t, std::array<TropValue, 4>{kBottom, kBottom, kBottom, 0});
  for (int j = 1; j <= t; ++j)
    for (int k = j; k <= t; ++k) g.emplace_back(f, t, std::array<TropValue, 4>{0, j, k, 0});
  return g;
}

std::size_t minplus_generator_count(int t) {
  check_t(t);
  return static_cast<std::size_t>(t) + 4;
}

std::size_t maxplus_generator_count(int t) {
  check_t(t);
  return static_cast<std::size_t>(t * t + 3 * t + 8) / 2;
}

std::vector<TropMat> all_trop_matrices(Flavor f, int t) {
  std::vector<TropValue> vals{kBottom};
  for (int i = 0; i <= t; ++i) vals.push_back(i);
  std::vector<TropMat> out;
  for (TropValue a : vals)
    for (TropValue b : vals)
      for (TropValue c : vals)
        for (TropValue d : vals) out.emplace_back(f, t, std::array<TropValue, 4>{a, b, c, d});
  return out;
}

namespace {

TropRow scale(const TropRow& r, TropValue a, int t) {
  TropRow s(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) s[i] = trop_mul(t, a, r[i]);
  return s;
}

// Componentwise order with -inf at the bottom.
bool row_leq(const TropRow& x, const TropRow& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != kBottom && (y[i] == kBottom || x[i] > y[i])) return false;
  return true;
}

}  // namespace

std::vector<TropRow> maxplus_row_basis(const std::vector<TropRow>& rows, int t) {
  std::set<TropRow> distinct;
  for (const auto& r : rows) {
    if (!rows.empty() && r.size() != rows.front().size()) throw std::invalid_argument("ragged rows");
    if (std::any_of(r.begin(), r.end(), [](TropValue v) { return v != kBottom; })) distinct.insert(r);
  }
  std::vector<TropRow> pool(distinct.begin(), distinct.end());
  std::vector<TropRow> basis;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const TropRow& r = pool[i];
    // largest multiple of each other row below r; scalar multiplication is
    // monotone so these cover everything any combination could use
    TropRow acc(r.size(), kBottom);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j == i) continue;
      for (TropValue a = t; a >= kBottom; --a) {
        TropRow s = scale(pool[j], a, t);
        if (row_leq(s, r)) {
          for (std::size_t c = 0; c < r.size(); ++c) acc[c] = trop_add(Flavor::max_plus, acc[c], s[c]);
          break;
        }
      }
    }
    if (acc != r) basis.push_back(r);
  }
  return basis;
}

std::vector<TropRow> maxplus_row_basis(const TropMat& a) {
  if (a.flavor() != Flavor::max_plus) throw std::invalid_argument("row basis needs a max-plus matrix");
  return maxplus_row_basis({{a.at(0, 0), a.at(0, 1)}, {a.at(1, 0), a.at(1, 1)}}, a.threshold());
}

std::size_t scalar_multiple_count(const TropRow& row, int t) {
  std::set<TropRow> seen;
  for (TropValue a = kBottom; a <= t; ++a) seen.insert(scale(row, a, t));
  return seen.size();
}

}  // namespace mingens
