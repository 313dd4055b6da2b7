#pragma once

#include "omega/canon.hpp"
#include "omega/engine.hpp"
#include "omega/error.hpp"
#include "omega/io.hpp"
#include "omega/linform.hpp"
#include "omega/matrix.hpp"
#include "omega/matrix_spec.hpp"
#include "omega/monomial.hpp"
#include "omega/oneshot.hpp"
#include "omega/reorder.hpp"
#include "omega/row.hpp"
#include "omega/scalar.hpp"
#include "omega/solver.hpp"
