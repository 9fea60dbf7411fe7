#pragma once

#include "landau/series.hpp"
#include "landau/maps.hpp"
#include "landau/bounds.hpp"
#include "landau/radii.hpp"
#include "landau/corpus.hpp"
#include "landau/scan.hpp"
#include "landau/report.hpp"
#include "landau/cli.hpp"
