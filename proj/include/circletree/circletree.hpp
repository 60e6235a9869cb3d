#pragma once

#include "circletree/census.hpp"
#include "circletree/census_cache.hpp"
#include "circletree/circle_graph.hpp"
#include "circletree/egraph.hpp"
#include "circletree/errors.hpp"
#include "circletree/form_catalog.hpp"
#include "circletree/io.hpp"
#include "circletree/lr_series.hpp"
#include "circletree/reduction.hpp"
#include "circletree/rotation_system.hpp"
#include "circletree/verify.hpp"
#include "circletree/version.hpp"
