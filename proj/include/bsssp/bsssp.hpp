#pragma once

// Umbrella header.

#include "bsssp/bundle_dijkstra.hpp"
#include "bsssp/bundles.hpp"
#include "bsssp/dijkstra.hpp"
#include "bsssp/dimacs.hpp"
#include "bsssp/errors.hpp"
#include "bsssp/generators.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/invariants.hpp"
#include "bsssp/metering.hpp"
#include "bsssp/pairing_heap.hpp"
#include "bsssp/pipeline.hpp"
#include "bsssp/random.hpp"
#include "bsssp/report.hpp"
#include "bsssp/transform.hpp"
