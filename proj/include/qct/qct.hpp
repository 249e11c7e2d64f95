#pragma once

#include "qct/errors.hpp"
#include "qct/linalg.hpp"
#include "qct/quiver.hpp"
#include "qct/admissibility.hpp"
#include "qct/modules.hpp"
#include "qct/representation.hpp"
#include "qct/oracle.hpp"
#include "qct/subcategories.hpp"
#include "qct/io.hpp"
