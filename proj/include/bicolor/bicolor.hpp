#pragma once

#include "bicolor/bicolored_set.hpp"
#include "bicolor/convex_solver.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/general_builder.hpp"
#include "bicolor/geometry.hpp"
#include "bicolor/instance_io.hpp"
#include "bicolor/oracle.hpp"
#include "bicolor/report.hpp"
#include "bicolor/route.hpp"
#include "bicolor/svg.hpp"
