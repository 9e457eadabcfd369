#pragma once

#include "algebra.hpp"
#include "catalog.hpp"
#include "consequence.hpp"
#include "identity.hpp"
#include "normalform.hpp"
#include "parser.hpp"
#include "term.hpp"
#include "verify.hpp"
