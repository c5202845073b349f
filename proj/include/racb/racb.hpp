// Umbrella header.
#pragma once

#include "racb/automorphism.hpp"
#include "racb/building.hpp"
#include "racb/diagram.hpp"
#include "racb/errors.hpp"
#include "racb/firmness_lab.hpp"
#include "racb/flex.hpp"
#include "racb/parallel.hpp"
#include "racb/poset.hpp"
#include "racb/word.hpp"
