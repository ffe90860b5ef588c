#pragma once

#include "hyperspace/assoc_array.hpp"
#include "hyperspace/database.hpp"
#include "hyperspace/dnn.hpp"
#include "hyperspace/errors.hpp"
#include "hyperspace/graph.hpp"
#include "hyperspace/key.hpp"
#include "hyperspace/semilink.hpp"
#include "hyperspace/semiring.hpp"
#include "hyperspace/tsv.hpp"
#include "hyperspace/value.hpp"
