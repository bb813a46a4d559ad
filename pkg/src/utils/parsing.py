"""
Parsing of command-line expressions

`--omega "x/y"` means the differential (x/y) dx. Expressions use fractions or
terminating decimals, x, y, +, -, *, / and integer powers (^ or **); sympy
does the parsing and the tree is then evaluated in the function field of the
curve, so y^2 is replaced by f.
"""
from fractions import Fraction
from typing import Any, Dict

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..derham.differentials import RationalDifferential
from .errors import DivisionByZeroError, InvalidSpecError

_X, _Y = sympy.symbols("x y")


def _symbols(curve: CurveModel) -> Dict[str, Any]:
    symbols = {"x": _X}
    if curve.is_hyperelliptic:
        symbols["y"] = _Y
    return symbols


def _evaluate(expr: sympy.Expr, curve: CurveModel) -> FunctionFieldElement:
    if expr.is_Rational:
        return FunctionFieldElement(curve, Fraction(int(expr.p), int(expr.q)))
    if expr.is_Float:
        return FunctionFieldElement(curve, Fraction(str(expr)))
    if expr == _X:
        return FunctionFieldElement.x(curve)
    if expr == _Y:
        return FunctionFieldElement.y(curve)
    if expr.is_Add:
        total = FunctionFieldElement(curve, 0)
        for term in expr.args:
            total = total + _evaluate(term, curve)
        return total
    if expr.is_Mul:
        product = FunctionFieldElement(curve, 1)
        for factor in expr.args:
            product = product * _evaluate(factor, curve)
        return product
    if expr.is_Pow:
        base, exponent = expr.args
        if not exponent.is_Integer:
            raise InvalidSpecError(f"Only integer powers are allowed, got {expr}")
        return _evaluate(base, curve) ** int(exponent)
    raise InvalidSpecError(f"Unsupported term {expr!s}")


def parse_function(text: str, curve: CurveModel) -> FunctionFieldElement:
    """Element of k(X) written in x and y"""
    try:
        expr = parse_expr(
            text.replace("^", "**"),
            local_dict=_symbols(curve),
            global_dict={"Integer": sympy.Integer, "Rational": sympy.Rational, "Float": sympy.Float, "Symbol": sympy.Symbol},
            transformations=standard_transformations,
        )
    except (SyntaxError, TypeError, NameError, ZeroDivisionError) as e:
        raise InvalidSpecError(f"Cannot parse expression {text!r}: {e}") from e
    if expr.free_symbols - set(_symbols(curve).values()):
        raise InvalidSpecError(f"Unknown symbols in {text!r}", {"symbols": sorted(map(str, expr.free_symbols))})
    if expr.has(sympy.zoo, sympy.nan):
        raise InvalidSpecError(f"Expression {text!r} divides by zero")
    try:
        return _evaluate(expr, curve)
    except DivisionByZeroError as e:
        raise InvalidSpecError(f"Expression {text!r} divides by zero in {curve.field}") from e


def parse_differential(text: str, curve: CurveModel) -> RationalDifferential:
    """g dx for the expression g"""
    return RationalDifferential.of(curve, parse_function(text, curve))
