#pragma once

#include "polyplex/constructions.hpp"
#include "polyplex/corpus.hpp"
#include "polyplex/cover_table.hpp"
#include "polyplex/covers.hpp"
#include "polyplex/enumerate.hpp"
#include "polyplex/error.hpp"
#include "polyplex/exact_lp.hpp"
#include "polyplex/extremal.hpp"
#include "polyplex/fixtures.hpp"
#include "polyplex/harness.hpp"
#include "polyplex/io.hpp"
#include "polyplex/matching.hpp"
#include "polyplex/rational.hpp"
#include "polyplex/tensor.hpp"
