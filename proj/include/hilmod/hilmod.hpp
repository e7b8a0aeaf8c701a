#pragma once

#include "canonical.hpp"
#include "curvature.hpp"
#include "errors.hpp"
#include "graded_ideal.hpp"
#include "kernel_models.hpp"
#include "linalg.hpp"
#include "multi_index.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "poly_space.hpp"
#include "scalar.hpp"
#include "selfcheck.hpp"
