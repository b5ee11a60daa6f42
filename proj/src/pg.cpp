#include "rcd/pg.hpp"

namespace rcd {

PGPoint canonicalize(const PrimeField& f, const Vec& v) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) {
        throw InvalidPointError("zero vector does not represent a projective point");
    }
    if (v[lead] == 1) return PGPoint(v);
    return PGPoint(scale(f, f.inv(v[lead]), v));
}

std::size_t pg_point_count(std::size_t m, unsigned s) {
    // (s^m - 1)/(s - 1) = 1 + s + ... + s^(m-1), with an overflow guard
    std::size_t total = 0;
    std::size_t power = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total += power;
        if (i + 1 < m) {
            if (power > (static_cast<std::size_t>(-1) / s)) {
                throw BadShapeError("projective point count overflows");
            }
            power *= s;
        }
    }
    return total;
}

std::vector<PGPoint> enumerate_points(std::size_t m, const PrimeField& f) {
    if (m == 0) throw BadShapeError("dimension must be at least 1");
    const unsigned s = f.modulus();
    std::vector<PGPoint> points;
    points.reserve(pg_point_count(m, s));
    // Lexicographic order: later leading positions sort first, e.g. (0,1) < (1,0).
    for (std::size_t lead = m; lead-- > 0;) {
        Vec v(m, 0);
        v[lead] = 1;
        while (true) {
            points.push_back(PGPoint(v));
            bool wrapped = true;
            for (std::size_t pos = m; pos-- > lead + 1;) {
                if (v[pos] + 1u < s) {
                    ++v[pos];
                    wrapped = false;
                    break;
                }
                v[pos] = 0;
            }
            if (wrapped) break;
        }
    }
    return points;
}

std::map<PGPoint, std::size_t> point_histogram(const FieldMatrix& m) {
    std::map<PGPoint, std::size_t> hist;
    for (const PGPoint& pt : enumerate_points(m.rows(), m.field())) {
        hist.emplace(pt, 0);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Vec column = m.col(c);
        if (is_zero_vec(column)) {
            throw InvalidPointError("zero column has no projective point", c);
        }
        ++hist.at(canonicalize(m.field(), column));
    }
    return hist;
}

}  // namespace rcd
