#pragma once

#include "nlie/basis.hpp"
#include "nlie/counting.hpp"
#include "nlie/error.hpp"
#include "nlie/grading.hpp"
#include "nlie/linear_combination.hpp"
#include "nlie/oracle.hpp"
#include "nlie/oracle_cache.hpp"
#include "nlie/report.hpp"
#include "nlie/rewrite.hpp"
#include "nlie/sparse_rank.hpp"
#include "nlie/term.hpp"
