#pragma once

#include "kspan/connectivity.hpp"
#include "kspan/digraph.hpp"
#include "kspan/dominating_chain.hpp"
#include "kspan/error.hpp"
#include "kspan/generators.hpp"
#include "kspan/good_ordering.hpp"
#include "kspan/io.hpp"
#include "kspan/linkage.hpp"
#include "kspan/matching.hpp"
#include "kspan/pipeline.hpp"
#include "kspan/small_sparsifier.hpp"
#include "kspan/sparsify.hpp"
#include "kspan/tournament.hpp"
