#ifndef HOMMAG_HOMMAG_HPP_
#define HOMMAG_HOMMAG_HPP_

// Umbrella header for the whole library.

#include "hommag/algebra.hpp"
#include "hommag/enumerate.hpp"
#include "hommag/fixture.hpp"
#include "hommag/iso.hpp"
#include "hommag/partial_magma.hpp"
#include "hommag/partial_map.hpp"
#include "hommag/predicates.hpp"
#include "hommag/report.hpp"
#include "hommag/verify.hpp"

#endif  // HOMMAG_HOMMAG_HPP_
