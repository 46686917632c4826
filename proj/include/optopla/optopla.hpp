#pragma once

// Convenience include for the whole library.

#include "optopla/bool_expr.hpp"
#include "optopla/capacity.hpp"
#include "optopla/channel_grid.hpp"
#include "optopla/devices.hpp"
#include "optopla/json_io.hpp"
#include "optopla/life.hpp"
#include "optopla/pla_config.hpp"
#include "optopla/reports.hpp"
#include "optopla/simulator.hpp"
#include "optopla/spatial_plan.hpp"
#include "optopla/stdlib_functions.hpp"
#include "optopla/truth_table.hpp"
#include "optopla/waveform.hpp"
