#pragma once

#include "mfvar/arcs.hpp"
#include "mfvar/arith_core.hpp"
#include "mfvar/audit.hpp"
#include "mfvar/divisor_models.hpp"
#include "mfvar/errors.hpp"
#include "mfvar/gamma.hpp"
#include "mfvar/io.hpp"
#include "mfvar/numeric.hpp"
#include "mfvar/ramanujan.hpp"
#include "mfvar/selberg_delange.hpp"
#include "mfvar/series.hpp"
#include "mfvar/smoothing.hpp"
#include "mfvar/stieltjes.hpp"
#include "mfvar/variance.hpp"
#include "mfvar/verify.hpp"
