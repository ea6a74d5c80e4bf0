#ifndef NCAST_NCAST_HPP
#define NCAST_NCAST_HPP

#include "ncast/baselines.hpp"
#include "ncast/experiment.hpp"
#include "ncast/format.hpp"
#include "ncast/lp.hpp"
#include "ncast/maxflow.hpp"
#include "ncast/metrics.hpp"
#include "ncast/mincut.hpp"
#include "ncast/network.hpp"
#include "ncast/rates.hpp"
#include "ncast/simplex.hpp"
#include "ncast/topology_io.hpp"

#endif  // NCAST_NCAST_HPP
