#pragma once

#include "floer/errors.hpp"
#include "floer/gf2.hpp"
#include "floer/complex.hpp"
#include "floer/random.hpp"
#include "floer/specseq.hpp"
#include "floer/deduce.hpp"
#include "floer/euler.hpp"
#include "floer/catalog.hpp"
#include "floer/io.hpp"
#include "floer/verify.hpp"
