#pragma once

#include "stefan_kit/convective.hpp"
#include "stefan_kit/equivalence.hpp"
#include "stefan_kit/error.hpp"
#include "stefan_kit/flux.hpp"
#include "stefan_kit/model.hpp"
#include "stefan_kit/neumann.hpp"
#include "stefan_kit/roots.hpp"
#include "stefan_kit/solution.hpp"
#include "stefan_kit/solve.hpp"
#include "stefan_kit/special.hpp"
#include "stefan_kit/verify/dimensionless.hpp"
#include "stefan_kit/verify/enthalpy.hpp"
#include "stefan_kit/verify/pipeline.hpp"
#include "stefan_kit/verify/residuals.hpp"
