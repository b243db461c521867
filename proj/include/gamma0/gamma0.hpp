#pragma once

// Umbrella header: exact q-expansions of genus-zero Hauptmoduls, Kloosterman
// and Bessel machinery, the two-variable Eisenstein/Poincare kernel, Hecke
// operators, and the infinite-product identity verifier built on top.

#include "rational.hpp"
#include "arith.hpp"
#include "special.hpp"
#include "qseries.hpp"
#include "biseries.hpp"
#include "hauptmodul.hpp"
#include "parallel.hpp"
#include "kernels.hpp"
#include "hecke.hpp"
#include "borcherds.hpp"
#include "kloosterman_cache.hpp"
#include "serialize.hpp"
