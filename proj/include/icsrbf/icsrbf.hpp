#pragma once

#include "icsrbf/analysis.hpp"
#include "icsrbf/collocation.hpp"
#include "icsrbf/error.hpp"
#include "icsrbf/kernel.hpp"
#include "icsrbf/polynomial.hpp"
#include "icsrbf/problem.hpp"
#include "icsrbf/problems.hpp"
#include "icsrbf/quadrature.hpp"
#include "icsrbf/tables.hpp"
