#ifndef MVQ_MVQ_HPP
#define MVQ_MVQ_HPP

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"
#include "mvq/criticality.hpp"
#include "mvq/decompose.hpp"
#include "mvq/errors.hpp"
#include "mvq/eval.hpp"
#include "mvq/hom.hpp"
#include "mvq/lex.hpp"
#include "mvq/parser.hpp"
#include "mvq/quasivariety.hpp"
#include "mvq/schemas.hpp"
#include "mvq/signature.hpp"
#include "mvq/subuniverse.hpp"
#include "mvq/table.hpp"
#include "mvq/term.hpp"

#endif  // MVQ_MVQ_HPP
