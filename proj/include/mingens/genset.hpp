#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mingens/boolmat.hpp"
#include "mingens/monoid.hpp"
#include "mingens/prime_filter.hpp"

namespace mingens {

namespace named {
BoolMat T(int n);  // transposition (1 2)
BoolMat U(int n);  // n-cycle, row i has its 1 in column i+1
BoolMat E(int n);  // identity plus a 1 in row 2, column 1
BoolMat F(int n);  // identity without its (1,1) entry
}  // namespace named

enum class MonoidTag { full, reflexive, hall, ut, lt, gossip };
MonoidTag monoid_from_string(const std::string& s);
std::string to_string(MonoidTag t);

// Membership in the target monoid; gossip has no direct test.
std::optional<bool> in_monoid(MonoidTag t, const BoolMat& a);
// Exact size when it has a closed form or n is small enough to count.
std::optional<std::uint64_t> monoid_size(MonoidTag t, int n);

struct Certification {
  std::optional<bool> generates;
  std::optional<bool> irredundant;
  std::optional<std::size_t> redundant_witness;
  std::size_t closure_size = 0;
  std::optional<std::uint64_t> target_size;
};

struct GenSetReport {
  MonoidTag monoid = MonoidTag::full;
  int n = 0;
  std::vector<BoolMat> generators;
  std::size_t rank = 0;
  bool monoid_generators = false;  // generates together with the identity
  Certification certified;
  std::vector<std::string> notes;
};

GenSetReport devadze_generators(int n, const PrimeOptions& opt = {});
GenSetReport hall_generators(int n, const PrimeOptions& opt = {});
GenSetReport ut_generators(int n);
GenSetReport lt_generators(int n);
GenSetReport gossip_generators(int n);

struct ReflexiveOptions {
  Exec exec = Exec::parallel;
  std::size_t node_budget = 2'000'000;  // intersection search, per matrix
};

enum class Decomposition { decomposable, indecomposable, budget_exhausted };

struct DecompositionResult {
  Decomposition status = Decomposition::indecomposable;
  std::optional<BoolMat> left, right;  // left * right == input when decomposable
  std::size_t nodes = 0;
};

// Searches for a = b * c with b, c reflexive and not in {I, a}. For trim a,
// row i of c is an intersection of rows of a that all contain column i; other
// inputs search every reflexive c below a.
DecompositionResult decompose_reflexive(const BoolMat& a, std::size_t node_budget = 2'000'000);
// Second-tier test over conjugates and a candidate right factor set.
bool decomposable_by_conjugates(const BoolMat& a, const std::vector<BoolMat>& right_factors);
bool is_decomposable_reflexive(const BoolMat& a, std::size_t node_budget = 2'000'000);

struct ReflexiveStats {
  std::size_t representatives = 0;   // trim, non-identity, up to conjugation
  std::size_t indecomposable = 0;    // among the representatives
  std::size_t fallback_used = 0;
};

GenSetReport reflexive_generators(int n, const ReflexiveOptions& opt = {}, ReflexiveStats* stats = nullptr);

GenSetReport generators_for(MonoidTag t, int n);

// Fills report.certified by closure. Target sizes are counted by brute force
// over M_n(B) when no closed form is known (n <= 4).
void certify(GenSetReport& report, const ClosureOptions& opt = {}, bool check_irredundant = true);

}  // namespace mingens
