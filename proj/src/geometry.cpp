#include "arrlat/geometry.hpp"

#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace arrlat {

int cmp_triple(const Triple& a, const Triple& b) {
    for (int i = 0; i < 3; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

Triple normalize_triple(const Triple& raw) {
    if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) throw ZeroVector();
    Int g = gcd(gcd(raw[0], raw[1]), raw[2]);
    Triple v;
    for (int i = 0; i < 3; ++i) mpz_divexact(v[i].get_mpz_t(), raw[i].get_mpz_t(), g.get_mpz_t());
    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            for (int j = i; j < 3; ++j) v[j] = -v[j];
        break;
    }
    return v;
}

ProjLine normalize_line(const Triple& raw) { return ProjLine{normalize_triple(raw)}; }

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw IdenticalLines();
    const Triple& a = l1.coeffs;
    const Triple& b = l2.coeffs;
    Triple cross = {a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
    return ProjPoint{normalize_triple(cross)};
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    return p.coords[0] * l.coeffs[0] + p.coords[1] * l.coeffs[1] + p.coords[2] * l.coeffs[2] == 0;
}

Arrangement build_arrangement(const std::vector<Triple>& raw_lines) {
    if (raw_lines.empty()) throw std::invalid_argument("arrangement needs at least one line");

    Arrangement arr;
    std::map<Triple, int, TripleLess> seen;
    for (int i = 0; i < static_cast<int>(raw_lines.size()); ++i) {
        const Triple& raw = raw_lines[i];
        if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0)
            throw ZeroVector("input line " + std::to_string(i) + " is the zero vector");
        Triple norm = normalize_triple(raw);
        auto [it, inserted] = seen.emplace(norm, i);
        if (!inserted)
            throw DuplicateLine(it->second, i,
                                "input lines " + std::to_string(it->second) + " and " +
                                    std::to_string(i) + " define the same projective line");
        arr.lines.push_back(ProjLine{norm});
    }

    const int n = static_cast<int>(arr.lines.size());
    std::map<Triple, std::set<int>, TripleLess> groups;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ProjPoint p = intersect(arr.lines[i], arr.lines[j]);
            auto& inc = groups[p.coords];
            inc.insert(i);
            inc.insert(j);
        }

    long long pair_total = 0;
    for (auto& [coords, inc] : groups) {
        ArrPoint pt;
        pt.point = ProjPoint{coords};
        pt.lines.assign(inc.begin(), inc.end());
        long long m = static_cast<long long>(pt.lines.size());
        pair_total += m * (m - 1) / 2;
        arr.points.push_back(std::move(pt));
    }
    assert(pair_total == static_cast<long long>(n) * (n - 1) / 2);

    return arr;
}

Int mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_adjugate(const Mat3& m) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // adj[i][j] = cofactor of m[j][i]
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    return a;
}

ProjLine transform_line(const ProjLine& l, const Mat3& m) {
    // A point map p -> m*p sends the line l to l * m^{-1}; the adjugate is an
    // integral scalar multiple of the inverse.
    Mat3 adj = mat3_adjugate(m);
    Triple out = {0, 0, 0};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) out[j] += l.coeffs[i] * adj[i][j];
    return normalize_line(out);
}

std::string triple_str(const Triple& t, char sep) {
    std::ostringstream os;
    os << t[0] << sep << t[1] << sep << t[2];
    return os.str();
}

}  // namespace arrlat
