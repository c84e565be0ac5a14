#pragma once

#include "combinatorics.hpp"
#include "grassmann.hpp"
#include "walgebra.hpp"
#include "linalg.hpp"
#include "module.hpp"
#include "standard_modules.hpp"
#include "module_ops.hpp"
#include "glconstruct.hpp"
#include "induction.hpp"
#include "tensorfield.hpp"
#include "stabilize.hpp"
#include "suite.hpp"
#include "report.hpp"
