#pragma once

#include "hvcert/algebra/partial_fractions.hpp"
#include "hvcert/algebra/polynomial.hpp"
#include "hvcert/algebra/positivity.hpp"
#include "hvcert/algebra/rational.hpp"
#include "hvcert/algebra/rational_function.hpp"
#include "hvcert/algebra/surd.hpp"
