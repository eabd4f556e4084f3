#pragma once

// Umbrella header for the half-space transient heat conduction library.

#include "cdh_kernel.hpp"
#include "config_json.hpp"
#include "core.hpp"
#include "fd_oracle.hpp"
#include "field.hpp"
#include "forcing.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"
#include "talbot.hpp"
#include "time_kernels.hpp"
