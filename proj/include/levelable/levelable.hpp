#pragma once

#include "levelable/algebra.hpp"
#include "levelable/chordal.hpp"
#include "levelable/classify.hpp"
#include "levelable/constructions.hpp"
#include "levelable/decide.hpp"
#include "levelable/experiments.hpp"
#include "levelable/generators.hpp"
#include "levelable/graph.hpp"
#include "levelable/json_io.hpp"
#include "levelable/linalg.hpp"
#include "levelable/mis.hpp"
#include "levelable/rational.hpp"
#include "levelable/simplex.hpp"
#include "levelable/wcw.hpp"
