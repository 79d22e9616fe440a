#pragma once

#include "overpart/enumeration.hpp"
#include "overpart/error.hpp"
#include "overpart/identities.hpp"
#include "overpart/qfunctions.hpp"
#include "overpart/report.hpp"
#include "overpart/series.hpp"
