#pragma once

#include "evdkit/dataio.hpp"
#include "evdkit/distribution.hpp"
#include "evdkit/error.hpp"
#include "evdkit/estimation.hpp"
#include "evdkit/format.hpp"
#include "evdkit/gof.hpp"
#include "evdkit/montecarlo.hpp"
#include "evdkit/optimizer.hpp"
#include "evdkit/parallel.hpp"
#include "evdkit/quadrature.hpp"
#include "evdkit/random.hpp"
#include "evdkit/reduction.hpp"
#include "evdkit/special_functions.hpp"
#include "evdkit/tails.hpp"
