#pragma once

#include "napp/flagideal/pl_function.hpp"

namespace napp {

// delta_x(f) = f(x) at the Gauss extension of the point.
inline Rational gelfand_eval(const Weight& point, const PLFunction& f)
{
    return eval(f, gauss_extend(point));
}

} // namespace napp
