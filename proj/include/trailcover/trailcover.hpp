#pragma once

#include "trailcover/cover.hpp"
#include "trailcover/enumerate.hpp"
#include "trailcover/euler.hpp"
#include "trailcover/gen.hpp"
#include "trailcover/graph.hpp"
#include "trailcover/io.hpp"
#include "trailcover/oracle.hpp"
#include "trailcover/reductions.hpp"
#include "trailcover/subgraph.hpp"
#include "trailcover/trail.hpp"
#include "trailcover/verify.hpp"
