#pragma once

#include "qfl/arithmetic.hpp"
#include "qfl/constants.hpp"
#include "qfl/error.hpp"
#include "qfl/parallel.hpp"
#include "qfl/primitive.hpp"
#include "qfl/report.hpp"
#include "qfl/sieve.hpp"
#include "qfl/statistics.hpp"
#include "qfl/stormer.hpp"
