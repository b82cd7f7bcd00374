#pragma once

// Umbrella header for the whole solver library.

#include "tensolve/contractions.hpp"
#include "tensolve/linalg.hpp"
#include "tensolve/metric.hpp"
#include "tensolve/oracle.hpp"
#include "tensolve/parameters.hpp"
#include "tensolve/perm_system.hpp"
#include "tensolve/rhs_builder.hpp"
#include "tensolve/solver.hpp"
#include "tensolve/tensor.hpp"
#include "tensolve/trace_system.hpp"
#include "tensolve/version.hpp"
