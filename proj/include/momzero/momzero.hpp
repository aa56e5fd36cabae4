#ifndef MOMZERO_MOMZERO_HPP
#define MOMZERO_MOMZERO_HPP

// Umbrella header: exact truncated moment matrices, monic orthogonal
// families, exact inverses and their forced zero patterns.

#include "grouping.hpp"
#include "inverse_pattern.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "moment_matrix.hpp"
#include "moment_sequence.hpp"
#include "multiindex.hpp"
#include "ortho_basis.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "statistics.hpp"

#endif
