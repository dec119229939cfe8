#pragma once

#include "ppzc/budget.hpp"
#include "ppzc/catalog.hpp"
#include "ppzc/census.hpp"
#include "ppzc/corr.hpp"
#include "ppzc/equiv.hpp"
#include "ppzc/errors.hpp"
#include "ppzc/numth.hpp"
#include "ppzc/orthoset.hpp"
#include "ppzc/parallel.hpp"
#include "ppzc/permpoly.hpp"
#include "ppzc/report.hpp"
#include "ppzc/theory.hpp"
#include "ppzc/zcseq.hpp"
