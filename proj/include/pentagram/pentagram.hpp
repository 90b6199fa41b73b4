#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "jet.hpp"
#include "bipoly.hpp"
#include "polymatrix.hpp"
#include "dense.hpp"
#include "rank.hpp"
#include "state.hpp"
#include "random.hpp"
#include "dynamics.hpp"
#include "poisson.hpp"
#include "lax.hpp"
#include "geometry.hpp"
#include "leapfrog.hpp"
