// lrc.hpp: umbrella header.
#pragma once
#include "arbitrary.hpp"
#include "concept.hpp"
#include "datagen.hpp"
#include "harness.hpp"
#include "instrumentation.hpp"
#include "io.hpp"
#include "majority.hpp"
#include "randomized.hpp"
#include "rng.hpp"
#include "teacher.hpp"
