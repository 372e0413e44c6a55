# Copyright (c) 2013 The ldgplates Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Arithmetic expressions over the coordinates x1, x2.

The grammar accepts floating literals, ``x1``, ``x2``, the operators
``+ - * / ^`` with standard precedence, parentheses, the functions ``sin``,
``cos``, ``exp``, ``sqrt`` and the constant ``pi``. Expressions are parsed
with sympy and evaluated through vectorized numpy closures.
"""

from tokenize import TokenError

import numpy
import sympy
from sympy.parsing import sympy_parser

X1, X2 = sympy.symbols('x1 x2', real=True)
VARIABLES = (X1, X2)
FUNCTIONS = {
    'sin': sympy.sin,
    'cos': sympy.cos,
    'exp': sympy.exp,
    'sqrt': sympy.sqrt,
}
ALLOWED_CHARACTERS = set('0123456789.+-*/^() \teE_abcdefghijklmnopqrstuvwxyz')
TRANSFORMATIONS = (sympy_parser.standard_transformations
                   + (sympy_parser.convert_xor,))


class Error(Exception):
    pass


class ParseError(Error):

    def __init__(self, text, column, message):
        super(ParseError, self).__init__('%s at column %d in "%s"' % (message, column, text))
        self.text = text
        self.column = column


class DomainError(Error):

    def __init__(self, text, point):
        super(DomainError, self).__init__('"%s" is undefined at (%g, %g)'
                                          % (text, point[0], point[1]))
        self.text = text
        self.point = point


def _check_characters(text):
    depth = 0
    for column, char in enumerate(text, 1):
        if char not in ALLOWED_CHARACTERS:
            raise ParseError(text, column, 'Unexpected character %r' % char)
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
            if depth < 0:
                raise ParseError(text, column, 'Unbalanced ")"')
    if depth:
        raise ParseError(text, len(text), 'Missing ")"')
    if '**' in text:
        raise ParseError(text, text.index('**') + 1, 'Unexpected "**", use "^"')


def _check_names(text, expression):
    local = dict(FUNCTIONS)
    for symbol in expression.free_symbols:
        if symbol not in VARIABLES:
            raise ParseError(text, text.find(str(symbol)) + 1,
                             'Unknown name "%s"' % symbol)
    for function in expression.atoms(sympy.Function):
        if function.func not in local.values():
            name = str(function.func)
            raise ParseError(text, text.find(name) + 1, 'Unknown function "%s"' % name)


def parse_expression(text):
    """Parses `text` into an :class:`Expression`.

    :raises: :exc:`ParseError` with the offending column.
    """
    if not text or not text.strip():
        raise ParseError(text or '', 1, 'Empty expression')
    _check_characters(text)
    local_dict = dict(FUNCTIONS, x1=X1, x2=X2, pi=sympy.pi, e=sympy.E)
    try:
        expression = sympy_parser.parse_expr(text, local_dict=local_dict,
                                             global_dict={'Integer': sympy.Integer,
                                                          'Float': sympy.Float,
                                                          'Rational': sympy.Rational,
                                                          'Symbol': sympy.Symbol,
                                                          'Function': sympy.Function},
                                             transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, sympy.SympifyError, TokenError) as e:
        column = getattr(e, 'offset', None) or 1
        raise ParseError(text, min(column, len(text)), 'Syntax error')
    if not isinstance(expression, sympy.Expr):
        raise ParseError(text, 1, 'Not an arithmetic expression')
    _check_names(text, expression)
    return Expression(expression, text)


class Expression(object):
    """A scalar function of ``(x1, x2)`` backed by a sympy expression."""

    def __init__(self, expression, text=None):
        self._expression = sympy.sympify(expression)
        self._text = text if text is not None else str(self._expression)
        self._function = sympy.lambdify(VARIABLES, self._expression, modules='numpy')

    def get_text(self):
        return self._text

    def get_sympy(self):
        return self._expression

    def is_constant(self):
        return not self._expression.free_symbols

    def __call__(self, points):
        """Evaluates at ``(N, 2)`` points.

        :raises: :exc:`DomainError` at the first point where the value is
          not finite.
        """
        points = numpy.atleast_2d(numpy.asarray(points, dtype=float))
        with numpy.errstate(invalid='ignore', divide='ignore', over='ignore'):
            values = self._function(points[:, 0], points[:, 1])
        values = numpy.broadcast_to(numpy.asarray(values, dtype=float),
                                    (len(points),)).copy()
        bad = ~numpy.isfinite(values)
        if bad.any():
            raise DomainError(self._text, points[numpy.flatnonzero(bad)[0]])
        return values

    def derivative(self, variable):
        """Partial derivative with respect to ``x1`` (0) or ``x2`` (1)."""
        return Expression(sympy.diff(self._expression, VARIABLES[variable]))

    def __str__(self):
        return self._text


def vector_function(expressions):
    """Stacks scalar expressions into a callable ``(N, 2) -> (N, c)``."""
    expressions = [e if isinstance(e, Expression) else parse_expression(e)
                   for e in expressions]

    def function(points):
        return numpy.stack([e(points) for e in expressions], axis=-1)

    return function


def vector_gradient(expressions):
    """Callable ``(N, 2) -> (N, c, 2)`` of the symbolic gradients."""
    expressions = [e if isinstance(e, Expression) else parse_expression(e)
                   for e in expressions]
    derivatives = [(e.derivative(0), e.derivative(1)) for e in expressions]

    def function(points):
        return numpy.stack([numpy.stack([d0(points), d1(points)], axis=-1)
                            for d0, d1 in derivatives], axis=1)

    return function


def vector_hessian(expressions):
    """Callable ``(N, 2) -> (N, c, 2, 2)`` of the symbolic Hessians."""
    expressions = [e if isinstance(e, Expression) else parse_expression(e)
                   for e in expressions]
    second = [[[e.derivative(a).derivative(b) for b in (0, 1)] for a in (0, 1)]
              for e in expressions]

    def function(points):
        return numpy.stack([numpy.stack([numpy.stack([d(points) for d in row], axis=-1)
                                         for row in rows], axis=-2)
                            for rows in second], axis=1)

    return function
