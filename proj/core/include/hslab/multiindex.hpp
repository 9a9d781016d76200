#pragma once

#include <vector>

namespace hslab {

/// All multi-indices of length n with |beta| = total, lexicographic order.
std::vector<std::vector<int>> compositions(int n, int total);

/// total! / prod(beta_i!) as a double; the multiplicity of the mixed partial
/// d^beta among the n^total ordered derivative tuples of that order.
double multinomial_multiplicity(int total, const std::vector<int>& beta);

}  // namespace hslab
