#pragma once

#include "peano/error.hpp"
#include "peano/numeric.hpp"
#include "peano/curve.hpp"
#include "peano/tiling.hpp"
#include "peano/series.hpp"
#include "peano/report.hpp"
#include "peano/algebra.hpp"
#include "peano/family.hpp"
#include "peano/sequence.hpp"
#include "peano/verify.hpp"
