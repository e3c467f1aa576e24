#pragma once

// umbrella header for the whole library

#include "abelian.hpp"
#include "cohomology.hpp"
#include "fusion_ring.hpp"
#include "int_linalg.hpp"
#include "json_io.hpp"
#include "module_theory.hpp"
#include "render.hpp"
#include "semisimple.hpp"
#include "two_category.hpp"
