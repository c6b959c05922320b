#pragma once

#include <cmath>
#include <vector>

#include "finsler/errors.hpp"

namespace finsler {

/// A point (x, y) of M' in one coordinate chart. The fiber part y must be
/// nonzero: the zero section does not meet M'.
struct ChartPoint {
    std::vector<double> x;
    std::vector<double> y;

    int dim() const { return static_cast<int>(x.size()); }
};

inline void validate_point(const ChartPoint& p) {
    if (p.x.size() != p.y.size() || p.x.empty())
        throw DomainError("chart point has mismatched coordinate sizes");
    double ynorm = 0.0;
    for (double yi : p.y) ynorm += yi * yi;
    if (ynorm == 0.0) throw DomainError("point not in M'");
}

} // namespace finsler
