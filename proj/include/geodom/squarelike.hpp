#pragma once

// Base and offset vectors that make a simple polygon behave like a square
// in a grid of translates, with an exhaustive exact verifier.

#include <optional>
#include <string>

#include "geodom/geom2d.hpp"

namespace geodom::squarelike {

using geom2d::Polygon;
using geom2d::Vec2;

struct SquareLikeCert {
    Vec2 b1, b2, u1, u2;
    Rational epsilon{0};
    int n = 0;
};

struct VerifyResult {
    bool ok = true;
    int property = 0;  // 1..4 for the first failing property, 0 when ok
    std::string detail;
};

/// Checks the clique, horizontal, vertical and distant-copies properties for
/// the index range |i|, |j| <= n^2.
VerifyResult verify_squarelike(const Polygon& p, const SquareLikeCert& cert, int n);

class SynthesisError : public std::runtime_error {
public:
    SynthesisError(const std::string& what, VerifyResult last)
        : std::runtime_error(what), last_(std::move(last)) {}
    const VerifyResult& last() const { return last_; }

private:
    VerifyResult last_;
};

/// Diameter-based construction with epsilon halving (at most 64 rounds);
/// returns the first candidate that passes verify_squarelike.
SquareLikeCert compute_squarelike_vectors(const Polygon& p, int n);

/// Bit length of the largest integer needed after scaling all certificate
/// coordinates to a common denominator (the denominator included).
int certificate_bits(const SquareLikeCert& cert);

std::string format_certificate(const SquareLikeCert& cert);

}  // namespace geodom::squarelike
