#pragma once

#include "posetglue/chains.hpp"
#include "posetglue/elevation.hpp"
#include "posetglue/error.hpp"
#include "posetglue/generate.hpp"
#include "posetglue/gluing.hpp"
#include "posetglue/io.hpp"
#include "posetglue/morphism.hpp"
#include "posetglue/poset.hpp"
#include "posetglue/script.hpp"
