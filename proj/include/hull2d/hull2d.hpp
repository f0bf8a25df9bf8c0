#pragma once

#include "hull2d/angular.hpp"
#include "hull2d/datagen.hpp"
#include "hull2d/discard.hpp"
#include "hull2d/errors.hpp"
#include "hull2d/geom.hpp"
#include "hull2d/oracle.hpp"
#include "hull2d/pipeline.hpp"
#include "hull2d/prefilter.hpp"
