// Small helpers shared by the unit tests.
#pragma once

#include "oracle_values.hpp"

#include <genleg/complex.hpp>

#include <algorithm>
#include <cmath>

namespace testing_util {

inline genleg::cplx to_cplx(const oracle::C& c) { return {c.re, c.im}; }

inline genleg::Side to_side(int s)
{
    return s > 0 ? genleg::Side::above : s < 0 ? genleg::Side::below : genleg::Side::off_axis;
}

inline double rel_err(genleg::cplx got, genleg::cplx want)
{
    double d = std::abs(got - want);
    double m = std::abs(want);
    return m == 0.0 ? d : d / m;
}

} // namespace testing_util
