#pragma once

#include "lfsrx/bitpack.hpp"
#include "lfsrx/bitstream_io.hpp"
#include "lfsrx/census.hpp"
#include "lfsrx/complexity.hpp"
#include "lfsrx/correlation.hpp"
#include "lfsrx/errors.hpp"
#include "lfsrx/extractor.hpp"
#include "lfsrx/fips.hpp"
#include "lfsrx/generator.hpp"
#include "lfsrx/lfsr.hpp"
#include "lfsrx/series.hpp"
#include "lfsrx/special_functions.hpp"
#include "lfsrx/spectrum.hpp"
