#pragma once

#include "galcount/constructions.hpp"
#include "galcount/estimator.hpp"
#include "galcount/fieldcount.hpp"
#include "galcount/fraction.hpp"
#include "galcount/group.hpp"
#include "galcount/groupspec.hpp"
#include "galcount/perm.hpp"
#include "galcount/sieves.hpp"
#include "galcount/tables.hpp"
