#pragma once

// Umbrella header for the real Clifford algebra toolkit.

#include "blade.hpp"
#include "center.hpp"
#include "classify.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "hyperbolic.hpp"
#include "linsolve.hpp"
#include "lipschitz.hpp"
#include "matrix.hpp"
#include "obstruction.hpp"
#include "orbit_solver.hpp"
#include "pairing.hpp"
#include "rational.hpp"
#include "rep.hpp"
#include "rep_build.hpp"
#include "rng.hpp"
#include "schur.hpp"
#include "signature.hpp"
#include "signed_perm.hpp"
