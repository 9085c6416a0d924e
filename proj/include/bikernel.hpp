#pragma once

#include "bikernel/bkcolor.hpp"
#include "bikernel/closure.hpp"
#include "bikernel/color.hpp"
#include "bikernel/condensation.hpp"
#include "bikernel/degree.hpp"
#include "bikernel/digraph.hpp"
#include "bikernel/errors.hpp"
#include "bikernel/families.hpp"
#include "bikernel/generate.hpp"
#include "bikernel/io.hpp"
#include "bikernel/matching.hpp"
#include "bikernel/product.hpp"
#include "bikernel/solve.hpp"
#include "bikernel/verdict.hpp"
#include "bikernel/verify.hpp"
