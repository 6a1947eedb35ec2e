#pragma once

#include "weilgroid/catalog.hpp"
#include "weilgroid/error.hpp"
#include "weilgroid/limits.hpp"
#include "weilgroid/linalg.hpp"
#include "weilgroid/model.hpp"
#include "weilgroid/ops.hpp"
#include "weilgroid/polynomial.hpp"
#include "weilgroid/random.hpp"
#include "weilgroid/sections.hpp"
#include "weilgroid/serialize.hpp"
#include "weilgroid/rational.hpp"
#include "weilgroid/simp.hpp"
#include "weilgroid/verify.hpp"
#include "weilgroid/weil.hpp"
