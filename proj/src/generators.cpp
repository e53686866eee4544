#include "arrlat/generators.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace arrlat {

std::vector<Triple> gen_pencil(int n) {
    if (n < 1) throw std::invalid_argument("pencil needs n >= 1");
    std::vector<Triple> lines;
    lines.push_back({1, 0, 0});
    if (n >= 2) lines.push_back({0, 1, 0});
    for (int k = 1; k <= n - 2; ++k) lines.push_back({1, k, 0});
    return lines;
}

std::vector<Triple> gen_near_pencil(int n) {
    if (n < 4) throw std::invalid_argument("near-pencil needs n >= 4");
    std::vector<Triple> lines = gen_pencil(n - 1);
    lines.push_back({0, 0, 1});
    return lines;
}

std::vector<Triple> gen_generic(int n) {
    if (n < 1) throw std::invalid_argument("generic needs n >= 1");
    // rows of a Vandermonde matrix: no three are ever concurrent
    std::vector<Triple> lines;
    for (int k = 0; k < n; ++k) lines.push_back({1, k, Int(k) * k});
    return lines;
}

std::vector<Triple> gen_two_multiple_points(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("two multiple points need p, q >= 2");
    std::vector<Triple> lines;
    lines.push_back({1, 0, 0});  // the line through both multiple points
    for (int k = 1; k <= p; ++k) lines.push_back({k, 1, 0});  // pencil at [0:0:1]
    for (int k = 1; k <= q; ++k) lines.push_back({k, 0, 1});  // pencil at [0:1:0]
    return lines;
}

Arrangement random_arrangement(std::mt19937_64& rng, int n_lines, long coeff_bound) {
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::map<Triple, int, TripleLess> seen;
    std::vector<Triple> lines;
    while (static_cast<int>(lines.size()) < n_lines) {
        Triple raw = {coeff(rng), coeff(rng), coeff(rng)};
        if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) continue;
        Triple norm = normalize_triple(raw);
        if (!seen.emplace(norm, 0).second) continue;
        lines.push_back(norm);
    }
    return build_arrangement(lines);
}

Mat3 random_invertible_matrix(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    while (true) {
        Mat3 m;
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        if (mat3_det(m) != 0) return m;
    }
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(perm[i], perm[static_cast<size_t>(pick(rng))]);
    }
    return perm;
}

}  // namespace arrlat
