// Umbrella header for the library (the command line lives in cli.hpp).

#pragma once

#include "mrcube/axioms.hpp"
#include "mrcube/boolean.hpp"
#include "mrcube/canonical.hpp"
#include "mrcube/collapse.hpp"
#include "mrcube/dot.hpp"
#include "mrcube/interval.hpp"
#include "mrcube/io.hpp"
#include "mrcube/model_finder.hpp"
#include "mrcube/models.hpp"
#include "mrcube/reconstruct.hpp"
#include "mrcube/signed_set.hpp"
#include "mrcube/structure.hpp"
