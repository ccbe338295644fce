#pragma once

#include <asine/diagnostics.hpp>
#include <asine/direct_inv.hpp>
#include <asine/error.hpp>
#include <asine/examples.hpp>
#include <asine/forward.hpp>
#include <asine/fourier_inv.hpp>
#include <asine/grid.hpp>
#include <asine/metrics.hpp>
#include <asine/noise.hpp>
#include <asine/quad.hpp>
#include <asine/sas.hpp>
#include <asine/specfun.hpp>
#include <asine/sphere.hpp>
