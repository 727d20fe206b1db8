#pragma once

#include "cliff/binor.hpp"
#include "cliff/expression.hpp"
#include "cliff/finite_dirac.hpp"
#include "cliff/hierarchy.hpp"
#include "cliff/matrix_rep.hpp"
#include "cliff/multivector.hpp"
#include "cliff/spectrum.hpp"
