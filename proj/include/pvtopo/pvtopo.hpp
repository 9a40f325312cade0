#pragma once

#include "pvtopo/analysis.hpp"
#include "pvtopo/error.hpp"
#include "pvtopo/homology.hpp"
#include "pvtopo/io.hpp"
#include "pvtopo/model.hpp"
#include "pvtopo/necklace.hpp"
#include "pvtopo/path_category.hpp"
#include "pvtopo/program.hpp"
#include "pvtopo/report.hpp"
#include "pvtopo/sset.hpp"
