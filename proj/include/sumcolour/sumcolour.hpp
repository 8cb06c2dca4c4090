#pragma once

#include "ambient.hpp"
#include "bigint.hpp"
#include "colouring.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "presentation.hpp"
#include "presentation_io.hpp"
#include "sumset_search.hpp"
#include "verifier.hpp"
