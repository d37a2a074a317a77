#pragma once

#include "flowinv/enumeration.hpp"
#include "flowinv/error.hpp"
#include "flowinv/finite_topology.hpp"
#include "flowinv/flow_graph.hpp"
#include "flowinv/io.hpp"
#include "flowinv/isomorphism.hpp"
#include "flowinv/multigraph.hpp"
#include "flowinv/saddle_diagram.hpp"
#include "flowinv/surface.hpp"
