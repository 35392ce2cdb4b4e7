#pragma once

#include "hgfae/asym.hpp"
#include "hgfae/asym_ab.hpp"
#include "hgfae/asym_ac.hpp"
#include "hgfae/complex.hpp"
#include "hgfae/error.hpp"
#include "hgfae/gamma.hpp"
#include "hgfae/hgf.hpp"
#include "hgfae/lattice_gas.hpp"
#include "hgfae/msd.hpp"
#include "hgfae/precision.hpp"
#include "hgfae/quadrature.hpp"
#include "hgfae/real.hpp"
