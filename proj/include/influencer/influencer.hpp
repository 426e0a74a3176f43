#pragma once

#include "influencer/centrality.hpp"
#include "influencer/diffusion.hpp"
#include "influencer/edge_list.hpp"
#include "influencer/error.hpp"
#include "influencer/export.hpp"
#include "influencer/graph.hpp"
#include "influencer/metrics.hpp"
#include "influencer/pipeline.hpp"
#include "influencer/random_graph.hpp"
#include "influencer/rank.hpp"
