#pragma once

#include "chibound/canonical.hpp"
#include "chibound/detect.hpp"
#include "chibound/enumerate.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"
#include "chibound/lemma.hpp"
#include "chibound/parallel.hpp"
#include "chibound/patterns.hpp"
#include "chibound/solve.hpp"
#include "chibound/verify.hpp"
#include "chibound/witnesses.hpp"
