#pragma once

#include "downup/ncalg.hpp"
#include "downup/qp_modules.hpp"
#include "downup/qwa_modules.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace downup::parse {

// Scalar expressions: integer and a/b literals, `q`, `zeta:n`, operators
// + - * / ^ and parentheses, whitespace-insensitive. The mode is inferred
// from the literals: `q` selects rational functions, `zeta:n` the n-th
// cyclotomic field, plain numbers stay rational. Mixing q with zeta, or two
// different cyclotomic orders, is rejected. Errors are ParseError with a
// 1-based position.
Scalar parse_scalar(const std::string& text);

// Lift a rational constant into the given mode; scalars already in the mode
// pass through, anything else raises ModeMismatch.
Scalar to_mode(const Scalar& x, const ScalarMode& m);

// Comma-separated `key=value` pairs with scalar values, e.g.
// "alpha=2,beta=-1,gamma=0". All values are lifted into the widest mode
// that appears, so "alpha=q+1,beta=-q,gamma=0" comes back uniformly as
// rational functions.
std::vector<std::pair<std::string, Scalar>> parse_params(const std::string& text);

// Algebra elements over a fixed presentation: generator letters from its
// alphabet, scalar literals in its mode, + - * ^ and parentheses, explicit
// '*' between factors, '/' only by scalars.
AlgebraElement parse_algebra_element(const std::shared_ptr<const Presentation>& p,
                                     const std::string& text);

// Module elements: sums of terms `c*v(n)`, `c*m(n)`, `c*w(n)` with scalar
// coefficients in q's mode. The symbol letters follow the module families;
// qwa has no m symbols.
qp::ModuleElement parse_qp_element(qp::ModuleKind kind, const Scalar& q, const std::string& text);
qwa::ModuleElement parse_qwa_element(qwa::ModuleKind kind, const Scalar& q,
                                     const std::string& text);

}  // namespace downup::parse
