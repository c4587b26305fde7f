#pragma once

#include "arithdyn/error.hpp"

#include "arithdyn/algebra/binary_form.hpp"
#include "arithdyn/algebra/factor_fp.hpp"
#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/algebra/fp.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/algebra/matrix.hpp"
#include "arithdyn/algebra/parse.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/algebra/residue.hpp"

#include "arithdyn/places/divisor.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"

#include "arithdyn/dynsys/families.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/dynsys/reduction.hpp"

#include "arithdyn/critical.hpp"
#include "arithdyn/lattes.hpp"
#include "arithdyn/minimality/minimal_resultant.hpp"
#include "arithdyn/minimality/multiplier.hpp"
#include "arithdyn/stability.hpp"
