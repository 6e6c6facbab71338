#pragma once

#include "complex_text.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "exhaustion.hpp"
#include "infinite_ladder.hpp"
#include "ladder.hpp"
#include "linear_solver.hpp"
#include "network.hpp"
#include "network_json.hpp"
#include "types.hpp"
