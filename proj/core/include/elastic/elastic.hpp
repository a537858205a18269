#pragma once

#include "elastic/datasets.hpp"
#include "elastic/diagnostics.hpp"
#include "elastic/errors.hpp"
#include "elastic/ingest.hpp"
#include "elastic/init.hpp"
#include "elastic/isotonic.hpp"
#include "elastic/majorize.hpp"
#include "elastic/solver.hpp"
#include "elastic/stress.hpp"
#include "elastic/types.hpp"
