#pragma once

#include "symcurve/curve.hpp"
#include "symcurve/errors.hpp"
#include "symcurve/fields.hpp"
#include "symcurve/harbourne.hpp"
#include "symcurve/labeled.hpp"
#include "symcurve/linsolve.hpp"
#include "symcurve/membership.hpp"
#include "symcurve/monomial.hpp"
#include "symcurve/polynomial.hpp"
#include "symcurve/staircase.hpp"
#include "symcurve/sympow.hpp"
