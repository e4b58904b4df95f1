#pragma once

#include "logmaj/error.hpp"
#include "logmaj/linalg.hpp"
#include "logmaj/means.hpp"
#include "logmaj/majorization.hpp"
#include "logmaj/norms.hpp"
#include "logmaj/rng.hpp"
#include "logmaj/randgen.hpp"
#include "logmaj/registry.hpp"
#include "logmaj/search.hpp"
#include "logmaj/matrix_io.hpp"
#include "logmaj/report.hpp"
