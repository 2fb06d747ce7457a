// Umbrella header.
#pragma once

#include "bch.hpp"
#include "format.hpp"
#include "idempotents.hpp"
#include "kv.hpp"
#include "linalg.hpp"
#include "lyndon.hpp"
#include "operators.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "word.hpp"
