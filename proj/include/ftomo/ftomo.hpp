#pragma once

#include "ftomo/csv.hpp"
#include "ftomo/deformation.hpp"
#include "ftomo/entanglement.hpp"
#include "ftomo/entropic.hpp"
#include "ftomo/error.hpp"
#include "ftomo/figures.hpp"
#include "ftomo/parallel.hpp"
#include "ftomo/special_functions.hpp"
#include "ftomo/states.hpp"
#include "ftomo/tomography.hpp"
#include "ftomo/uncertainty.hpp"
#include "ftomo/verification.hpp"
