// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fuzzymt/algebra.hpp"
#include "fuzzymt/bayes.hpp"
#include "fuzzymt/errors.hpp"
#include "fuzzymt/formula.hpp"
#include "fuzzymt/inference.hpp"
#include "fuzzymt/sht.hpp"
#include "fuzzymt/tnorm.hpp"
#include "fuzzymt/truth_value.hpp"
