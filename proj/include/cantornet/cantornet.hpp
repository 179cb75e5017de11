#pragma once

#include "cantornet/bitstream.hpp"
#include "cantornet/coordinates.hpp"
#include "cantornet/cylinder.hpp"
#include "cantornet/encoder.hpp"
#include "cantornet/fixtures.hpp"
#include "cantornet/graph.hpp"
#include "cantornet/homeomorphism.hpp"
#include "cantornet/interval.hpp"
#include "cantornet/kraft.hpp"
#include "cantornet/rational.hpp"
