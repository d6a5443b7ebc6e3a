#pragma once

#include "cliquelab/canonical.hpp"
#include "cliquelab/cliques.hpp"
#include "cliquelab/conjectures.hpp"
#include "cliquelab/dynamics.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/graph6.hpp"
#include "cliquelab/search.hpp"
