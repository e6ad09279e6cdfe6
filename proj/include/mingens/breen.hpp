#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mingens/boolmat.hpp"
#include "mingens/exec.hpp"

namespace mingens {

inline constexpr int kMaxEnumDim = 8;

using MatrixVisitor = std::function<void(const BoolMat&)>;

bool is_breen_form(const BoolMat& a);
bool is_reflexive_breen_form(const BoolMat& a);

// Trim matrices in Breen form, depth first, rows chosen in ascending order.
// The zero matrix comes first.
void for_each_trim_breen(int n, const MatrixVisitor& visit);
// Same set, sorted. The parallel version splits the root subtrees.
std::vector<BoolMat> trim_breen(int n, Exec exec = Exec::parallel);

// All matrices in Breen form, trim or not.
void for_each_breen(int n, const MatrixVisitor& visit);
std::uint64_t count_breen(int n, Exec exec = Exec::parallel);

// Sorted, distinct canonical_similarity images of the trim Breen matrices.
// Contains the zero matrix and one permutation matrix.
std::vector<BoolMat> canonical_superset(int n, Exec exec = Exec::parallel);
// The superset without permutation matrices, as the prime filters expect.
std::vector<BoolMat> filter_input(const std::vector<BoolMat>& superset);

// Number of J-classes of M_n(B): distinct canonical images of Breen forms.
std::uint64_t count_jclasses(int n, Exec exec = Exec::parallel);

// Trim reflexive matrices in reflexive Breen form.
void for_each_reflexive_breen(int n, const MatrixVisitor& visit);
// Sorted, distinct canonical_conjugation images of those matrices.
std::vector<BoolMat> reflexive_representatives(int n, Exec exec = Exec::parallel);

}  // namespace mingens
