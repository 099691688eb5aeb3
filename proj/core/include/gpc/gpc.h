#pragma once

#include "gpc/channel.h"
#include "gpc/eigen_function.h"
#include "gpc/error.h"
#include "gpc/generators.h"
#include "gpc/kernels.h"
#include "gpc/mixtures.h"
#include "gpc/mub.h"
#include "gpc/trajectory.h"
#include "gpc/volterra.h"
