#pragma once

#include <random>

#include "arrlat/geometry.hpp"

namespace arrlat {

// Deterministic corpus shapes. All outputs are already normalized and
// pairwise distinct.
std::vector<Triple> gen_pencil(int n);              // n >= 1, concurrent at [0:0:1]
std::vector<Triple> gen_near_pencil(int n);         // n >= 4, pencil of n-1 plus one line
std::vector<Triple> gen_generic(int n);             // n >= 1, no three concurrent
std::vector<Triple> gen_two_multiple_points(int p, int q);  // p, q >= 2

Arrangement random_arrangement(std::mt19937_64& rng, int n_lines, long coeff_bound = 9);
Mat3 random_invertible_matrix(std::mt19937_64& rng, long bound = 5);
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

}  // namespace arrlat
