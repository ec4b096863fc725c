#pragma once

#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/polyhedron.hpp"
#include "troplith/cycle.hpp"
#include "troplith/affine_map.hpp"
#include "troplith/pl_function.hpp"
#include "troplith/divisor.hpp"
#include "troplith/morphism.hpp"
#include "troplith/stable_intersection.hpp"
#include "troplith/recession.hpp"
#include "troplith/local_geometry.hpp"
#include "troplith/decompose.hpp"
#include "troplith/io.hpp"
#include "troplith/plot.hpp"
