#ifndef SIMPLEXGRAD_SIMPLEXGRAD_HPP
#define SIMPLEXGRAD_SIMPLEXGRAD_HPP

// Umbrella header: regular simplex construction, O(n) / O(n^2) simplex
// gradients, Richardson extrapolation, benchmark functions and text I/O.

#include "simplexgrad/errors.hpp"
#include "simplexgrad/extrapolation.hpp"
#include "simplexgrad/gradient.hpp"
#include "simplexgrad/integer_simplex.hpp"
#include "simplexgrad/io.hpp"
#include "simplexgrad/matrix.hpp"
#include "simplexgrad/simplex.hpp"
#include "simplexgrad/testbed.hpp"

#endif  // SIMPLEXGRAD_SIMPLEXGRAD_HPP
