#pragma once

#include "kef/analysis.hpp"
#include "kef/caps.hpp"
#include "kef/critical.hpp"
#include "kef/errors.hpp"
#include "kef/generators.hpp"
#include "kef/graph.hpp"
#include "kef/graph_io.hpp"
#include "kef/harness.hpp"
#include "kef/independence.hpp"
#include "kef/ke.hpp"
#include "kef/matching.hpp"
#include "kef/odd_structure.hpp"
#include "kef/report.hpp"
#include "kef/theorems.hpp"
#include "kef/vertex_set.hpp"
