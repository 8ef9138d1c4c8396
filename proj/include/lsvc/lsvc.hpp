#pragma once

#include "lsvc/coloring.hpp"
#include "lsvc/generate.hpp"
#include "lsvc/graph.hpp"
#include "lsvc/io.hpp"
#include "lsvc/matching.hpp"
#include "lsvc/permissive.hpp"
#include "lsvc/reductions.hpp"
#include "lsvc/strict.hpp"
