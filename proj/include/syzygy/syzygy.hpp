#ifndef SYZYGY_SYZYGY_HPP
#define SYZYGY_SYZYGY_HPP

/** Umbrella header: the whole library in one include. */

#include "betti.hpp"
#include "breaker.hpp"
#include "complex.hpp"
#include "core.hpp"
#include "field.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "parallel.hpp"

#endif  // SYZYGY_SYZYGY_HPP
