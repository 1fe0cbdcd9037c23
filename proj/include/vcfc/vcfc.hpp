// Convenience header pulling in the whole library.

#ifndef VCFC_VCFC_HPP
#define VCFC_VCFC_HPP

#include "vcfc/bounds.hpp"
#include "vcfc/coloring.hpp"
#include "vcfc/constructions.hpp"
#include "vcfc/decomposition.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/graph6.hpp"
#include "vcfc/io.hpp"
#include "vcfc/metrics.hpp"
#include "vcfc/paths.hpp"
#include "vcfc/solver.hpp"
#include "vcfc/verifier.hpp"

#endif  // VCFC_VCFC_HPP
