#pragma once

// Umbrella header.

#include "regge/error.hpp"
#include "regge/exact.hpp"
#include "regge/fuchs.hpp"
#include "regge/howe.hpp"
#include "regge/matrix2.hpp"
#include "regge/mp_complex.hpp"
#include "regge/poly.hpp"
#include "regge/pvi.hpp"
#include "regge/racah.hpp"
#include "regge/random.hpp"
#include "regge/series.hpp"
#include "regge/tableaux.hpp"
#include "regge/tetra.hpp"
#include "regge/verify.hpp"
