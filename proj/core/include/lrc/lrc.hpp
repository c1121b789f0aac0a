#pragma once

#include "lrc/divergence.hpp"
#include "lrc/error.hpp"
#include "lrc/fit.hpp"
#include "lrc/lexicon.hpp"
#include "lrc/nullmodels.hpp"
#include "lrc/random.hpp"
#include "lrc/textnorm.hpp"
#include "lrc/walk.hpp"
