#pragma once

#include <compare>
#include <map>
#include <vector>

#include "rcd/gf.hpp"

namespace rcd {

// A point of PG(m-1, s): the canonical representative of a 1-dimensional
// subspace of GF(s)^m, normalized so the first nonzero coordinate is 1.
class PGPoint {
public:
    const Vec& coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }

    auto operator<=>(const PGPoint&) const = default;  // lexicographic on coords

private:
    friend PGPoint canonicalize(const PrimeField& f, const Vec& v);
    friend std::vector<PGPoint> enumerate_points(std::size_t m, const PrimeField& f);
    explicit PGPoint(Vec coords) : coords_(std::move(coords)) {}
    Vec coords_;
};

// Scales v by the inverse of its first nonzero entry. Throws InvalidPointError
// on the zero vector.
PGPoint canonicalize(const PrimeField& f, const Vec& v);

// All (s^m - 1)/(s - 1) points of PG(m-1, s), in lexicographic coordinate order.
std::vector<PGPoint> enumerate_points(std::size_t m, const PrimeField& f);

std::size_t pg_point_count(std::size_t m, unsigned s);

// Counts matrix columns per canonical point, zero-filled over the whole point
// set of PG(rows-1, s). A zero column raises InvalidPointError with its index.
std::map<PGPoint, std::size_t> point_histogram(const FieldMatrix& m);

}  // namespace rcd
