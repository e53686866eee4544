#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrlat {

using Int = mpz_class;
using Triple = std::array<Int, 3>;
using Mat3 = std::array<std::array<Int, 3>, 3>;

struct ZeroVector : std::runtime_error {
    ZeroVector() : std::runtime_error("zero vector has no projective class") {}
    explicit ZeroVector(const std::string& what) : std::runtime_error(what) {}
};

struct IdenticalLines : std::runtime_error {
    IdenticalLines() : std::runtime_error("identical lines do not intersect in a single point") {}
};

struct DuplicateLine : std::runtime_error {
    DuplicateLine(int first_, int second_, const std::string& what)
        : std::runtime_error(what), first(first_), second(second_) {}
    int first;
    int second;
};

int cmp_triple(const Triple& a, const Triple& b);

struct TripleLess {
    bool operator()(const Triple& a, const Triple& b) const { return cmp_triple(a, b) < 0; }
};

// Canonical representative of the projective class: gcd 1, first nonzero
// entry positive. Throws ZeroVector on (0,0,0).
Triple normalize_triple(const Triple& raw);

/// A line a*x + b*y + c*z = 0, stored normalized.
struct ProjLine {
    Triple coeffs;
    friend bool operator==(const ProjLine& l, const ProjLine& r) {
        return cmp_triple(l.coeffs, r.coeffs) == 0;
    }
};

/// A point [x:y:z], stored normalized.
struct ProjPoint {
    Triple coords;
    friend bool operator==(const ProjPoint& l, const ProjPoint& r) {
        return cmp_triple(l.coords, r.coords) == 0;
    }
};

ProjLine normalize_line(const Triple& raw);

// Intersection point of two distinct lines (normalized cross product).
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

bool incident(const ProjPoint& p, const ProjLine& l);

struct ArrPoint {
    ProjPoint point;
    std::vector<int> lines;  // sorted indices of the incident lines
    int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct Arrangement {
    std::vector<ProjLine> lines;   // input order, normalized
    std::vector<ArrPoint> points;  // sorted by point coordinates
};

// Normalizes and dedup-checks the lines, computes all pairwise
// intersections and groups the coinciding ones.
Arrangement build_arrangement(const std::vector<Triple>& raw_lines);

Int mat3_det(const Mat3& m);
Mat3 mat3_adjugate(const Mat3& m);

// Image of a line under the point map p -> m*p (m invertible).
ProjLine transform_line(const ProjLine& l, const Mat3& m);

std::string triple_str(const Triple& t, char sep);

}  // namespace arrlat
