#pragma once

#include "htors/bitset.hpp"
#include "htors/closure.hpp"
#include "htors/context.hpp"
#include "htors/enumerate.hpp"
#include "htors/errors.hpp"
#include "htors/homext.hpp"
#include "htors/kupisch.hpp"
#include "htors/lattice.hpp"
#include "htors/module_set.hpp"
#include "htors/serialize.hpp"
#include "htors/tuples.hpp"
#include "htors/universe.hpp"
