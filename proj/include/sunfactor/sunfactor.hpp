#pragma once

#include "sunfactor/connectivity.hpp"
#include "sunfactor/corpus.hpp"
#include "sunfactor/errors.hpp"
#include "sunfactor/generators.hpp"
#include "sunfactor/graph.hpp"
#include "sunfactor/graph6.hpp"
#include "sunfactor/hunt.hpp"
#include "sunfactor/matching.hpp"
#include "sunfactor/path_factor.hpp"
#include "sunfactor/robustness.hpp"
#include "sunfactor/sun.hpp"
