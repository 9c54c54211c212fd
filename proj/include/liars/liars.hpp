#pragma once

// Umbrella header for the liar-census library.

#include "liars/asymptotics.hpp"
#include "liars/core_arith.hpp"
#include "liars/factor_sieve.hpp"
#include "liars/factorization.hpp"
#include "liars/liar_census.hpp"
#include "liars/semiprime.hpp"
#include "liars/tabulate.hpp"
