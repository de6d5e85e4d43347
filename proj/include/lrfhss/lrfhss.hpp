#pragma once

// Umbrella header for the LR-FHSS network simulator library.

#include "lrfhss/acrda.hpp"
#include "lrfhss/campaign.hpp"
#include "lrfhss/coding.hpp"
#include "lrfhss/config.hpp"
#include "lrfhss/emit.hpp"
#include "lrfhss/engine.hpp"
#include "lrfhss/gateway.hpp"
#include "lrfhss/metrics.hpp"
#include "lrfhss/node.hpp"
#include "lrfhss/packet.hpp"
#include "lrfhss/params.hpp"
#include "lrfhss/random.hpp"
#include "lrfhss/simulation.hpp"
#include "lrfhss/sim_time.hpp"
#include "lrfhss/trace.hpp"
#include "lrfhss/traffic.hpp"
