#pragma once

#include "longzeta/laurent.hpp"
#include "longzeta/ring_t.hpp"
#include "longzeta/zeta_polynomial.hpp"
#include "longzeta/determinant.hpp"
#include "longzeta/oracle.hpp"
#include "longzeta/diagram.hpp"
#include "longzeta/invariant.hpp"
#include "longzeta/moves.hpp"
