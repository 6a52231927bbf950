// mirrorcoh.hpp — Umbrella header

#pragma once

#include "mirrorcoh/boundary_kernel.hpp"
#include "mirrorcoh/coherence.hpp"
#include "mirrorcoh/lindblad.hpp"
#include "mirrorcoh/model.hpp"
#include "mirrorcoh/scenarios.hpp"
