#pragma once

#include "kmw/cartan.hpp"
#include "kmw/character_cache.hpp"
#include "kmw/characters.hpp"
#include "kmw/error.hpp"
#include "kmw/gko.hpp"
#include "kmw/linalg.hpp"
#include "kmw/polyhedron.hpp"
#include "kmw/rational.hpp"
#include "kmw/simplex.hpp"
#include "kmw/tensor.hpp"
#include "kmw/verify.hpp"
#include "kmw/weight.hpp"
#include "kmw/weyl.hpp"
