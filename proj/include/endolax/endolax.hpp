#pragma once

#include "endolax/algebra_io.hpp"
#include "endolax/catalog.hpp"
#include "endolax/coalgebra.hpp"
#include "endolax/endo.hpp"
#include "endolax/fieldlang.hpp"
#include "endolax/fields.hpp"
#include "endolax/flow.hpp"
#include "endolax/lax.hpp"
#include "endolax/lie_algebra.hpp"
#include "endolax/multipoly.hpp"
#include "endolax/qmatrix.hpp"
#include "endolax/rational.hpp"
#include "endolax/report.hpp"
#include "endolax/sampling.hpp"
