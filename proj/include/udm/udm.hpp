#pragma once

// Umbrella header: data representations for unreliable memories, the fault
// channels, application cost functions, the exhaustive mapping optimizer,
// and the coded-link Monte-Carlo simulator.

#include "udm/alphabet.hpp"
#include "udm/channel.hpp"
#include "udm/conv_code.hpp"
#include "udm/cost.hpp"
#include "udm/distribution.hpp"
#include "udm/io.hpp"
#include "udm/link_sim.hpp"
#include "udm/mapping.hpp"
#include "udm/optimizer.hpp"
#include "udm/parallel.hpp"
#include "udm/quantizer.hpp"
#include "udm/rng.hpp"
