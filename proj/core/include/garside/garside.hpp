#pragma once

// Umbrella header.

#include "garside/builders.hpp"
#include "garside/errors.hpp"
#include "garside/geometry.hpp"
#include "garside/germ.hpp"
#include "garside/homology.hpp"
#include "garside/snf.hpp"
#include "garside/words.hpp"
