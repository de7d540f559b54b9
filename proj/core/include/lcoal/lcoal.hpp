#ifndef LCOAL_LCOAL_HPP
#define LCOAL_LCOAL_HPP

#include "lcoal/basis.hpp"
#include "lcoal/braid.hpp"
#include "lcoal/coalgebra.hpp"
#include "lcoal/companion.hpp"
#include "lcoal/error.hpp"
#include "lcoal/generators.hpp"
#include "lcoal/graph.hpp"
#include "lcoal/linear_endo.hpp"
#include "lcoal/scalar.hpp"
#include "lcoal/tensor.hpp"
#include "lcoal/text_format.hpp"
#include "lcoal/ybe.hpp"

#endif  // LCOAL_LCOAL_HPP
