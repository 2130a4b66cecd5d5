#pragma once

#include "napp/tropics/character.hpp"
#include "napp/tropics/gelfand.hpp"
#include "napp/tropics/tropical.hpp"

#include "napp/valuations/monomial_ideal.hpp"
#include "napp/valuations/newton.hpp"
#include "napp/valuations/valuation.hpp"
#include "napp/valuations/weight.hpp"

#include "napp/flagideal/flag_ideal.hpp"
#include "napp/flagideal/gauss.hpp"
#include "napp/flagideal/pl_function.hpp"
#include "napp/flagideal/sup_formula.hpp"

#include "napp/testconfig/build.hpp"
#include "napp/testconfig/dictionary.hpp"
#include "napp/testconfig/dual_complex.hpp"
#include "napp/testconfig/fan.hpp"

#include "napp/intersect/intersection.hpp"
#include "napp/intersect/polytope.hpp"
#include "napp/intersect/recursion.hpp"
#include "napp/intersect/toric_class.hpp"

#include "napp/functionals/energy.hpp"
#include "napp/functionals/mabuchi.hpp"
#include "napp/functionals/pairing.hpp"
#include "napp/functionals/random.hpp"
#include "napp/functionals/zariski.hpp"
