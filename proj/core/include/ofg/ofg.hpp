#pragma once

#include "ofg/costs.hpp"
#include "ofg/efficiency.hpp"
#include "ofg/errors.hpp"
#include "ofg/experiment.hpp"
#include "ofg/game.hpp"
#include "ofg/generators.hpp"
#include "ofg/instance_io.hpp"
#include "ofg/random.hpp"
#include "ofg/smoothness.hpp"
#include "ofg/solvers.hpp"
#include "ofg/stackelberg.hpp"
