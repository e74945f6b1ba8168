#pragma once

/*! \file
 * \brief Umbrella header for the whole library.
 */

#include "mullat/core.hpp"
#include "mullat/decomposition.hpp"
#include "mullat/finite_lattice.hpp"
#include "mullat/json_io.hpp"
#include "mullat/mult_lattice.hpp"
#include "mullat/ring_bridge.hpp"
#include "mullat/s_theory.hpp"
#include "mullat/verify.hpp"
