#pragma once

#include "qsppf/analysis.hpp"
#include "qsppf/bessel.hpp"
#include "qsppf/chebyshev.hpp"
#include "qsppf/constants.hpp"
#include "qsppf/dft.hpp"
#include "qsppf/jacobi_anger.hpp"
#include "qsppf/kernel.hpp"
#include "qsppf/solver.hpp"
#include "qsppf/types.hpp"
