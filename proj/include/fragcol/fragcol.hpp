#pragma once

// Umbrella header: the whole bounded-component colouring toolkit.

#include "fragcol/bounds.hpp"
#include "fragcol/colouring.hpp"
#include "fragcol/connectivity.hpp"
#include "fragcol/cycle_search.hpp"
#include "fragcol/extremal.hpp"
#include "fragcol/fragment_colouring.hpp"
#include "fragcol/graph.hpp"
#include "fragcol/oracle.hpp"
#include "fragcol/verifier.hpp"
