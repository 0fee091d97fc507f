#pragma once

#include "dtcwt.hpp"
#include "dwt.hpp"
#include "errors.hpp"
#include "filterbank.hpp"
#include "fusion.hpp"
#include "image.hpp"
#include "image_io.hpp"
#include "lifting.hpp"
#include "matrix.hpp"
#include "metrics.hpp"
#include "swt.hpp"
#include "threads.hpp"
