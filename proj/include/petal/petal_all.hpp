#pragma once
#include "petal/errors.hpp"
#include "petal/constants.hpp"
#include "petal/rng.hpp"
#include "petal/series.hpp"
#include "petal/caratheodory.hpp"
#include "petal/coefficients.hpp"
#include "petal/functionals.hpp"
#include "petal/optimizer.hpp"
#include "petal/extremal.hpp"
