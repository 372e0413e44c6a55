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

"""Analytic immersions and the catalog of target metrics.

Immersions are sympy expressions in ``x1, x2``; their first fundamental form
g = grad y^T grad y and all derivatives are derived symbolically.
"""

import numpy
import sympy

from ldgplates import expressions
from ldgplates.energy import metric as metric_lib

X1, X2 = expressions.VARIABLES


def _lambdify_array(array):
    """Vectorized closure of a sympy array; constant entries are broadcast."""
    flat = numpy.array(array.tolist(), dtype=object)
    shape = flat.shape
    entries = [sympy.lambdify(expressions.VARIABLES, entry, modules='numpy')
               for entry in flat.ravel()]

    def function(points):
        points = numpy.atleast_2d(points)
        n = len(points)
        values = [numpy.broadcast_to(numpy.asarray(f(points[:, 0], points[:, 1]),
                                                   dtype=float), (n,))
                  for f in entries]
        return numpy.stack(values, axis=-1).reshape((n,) + tuple(shape))

    return function


class AnalyticImmersion(object):
    """A smooth map y: R^2 -> R^3 given by three sympy expressions."""

    def __init__(self, name, components):
        self._name = name
        y = sympy.Matrix([sympy.sympify(c) for c in components])
        jacobian = y.jacobian([X1, X2])
        metric = sympy.simplify(jacobian.T * jacobian)
        hessians = sympy.Array([[[sympy.diff(c, a, b) for b in (X1, X2)]
                                 for a in (X1, X2)] for c in y])
        self._expressions = y
        self._metric_expression = metric
        self._value = _lambdify_array(sympy.Array(y.T.tolist()[0]))
        self._gradient = _lambdify_array(sympy.Array(jacobian.tolist()))
        self._hessian = _lambdify_array(hessians)
        self._metric = _lambdify_array(sympy.Array(metric.tolist()))
        metric_gradient = sympy.Array([[[sympy.diff(metric[i, j], a) for a in (X1, X2)]
                                        for j in range(2)] for i in range(2)])
        self._metric_gradient = _lambdify_array(metric_gradient)

    def get_name(self):
        return self._name

    def get_expressions(self):
        return list(self._expressions)

    def value(self, points):
        """``(N, 3)``"""
        return self._value(points)

    def gradient(self, points):
        """``(N, 3, 2)`` Jacobian."""
        return self._gradient(points)

    def hessian(self, points):
        """``(N, 3, 2, 2)`` Hessians of the components."""
        return self._hessian(points)

    def first_fundamental_form(self, points):
        grad = self.gradient(points)
        return numpy.einsum('nma,nmb->nab', grad, grad)

    def normal(self, points):
        grad = self.gradient(points)
        n = numpy.cross(grad[:, :, 0], grad[:, :, 1])
        return n / numpy.linalg.norm(n, axis=1)[:, None]

    def second_fundamental_form(self, points):
        """``(N, 2, 2)`` II[y]_ij = d_ij y . nu."""
        return numpy.einsum('nmij,nm->nij', self.hessian(points), self.normal(points))

    def metric_field(self, name=None):
        """The metric realized by this immersion."""
        return metric_lib.MetricField(self._metric, name or self._name, immersion=self,
                                      gradient=self._metric_gradient)

    def __str__(self):
        return '%s[%s]' % (self.__class__.__name__, self._name)


def plane():
    return AnalyticImmersion('plane', (X1, X2, 0))


def cylinder():
    return AnalyticImmersion('cylinder', (sympy.sin(X1), X2, sympy.cos(X1)))


def catenoid():
    return AnalyticImmersion('catenoid', (sympy.cosh(X1) * sympy.cos(X2),
                                          sympy.cosh(X1) * sympy.sin(X2), X1))


IMMERSIONS = {
    'plane': plane,
    'cylinder': cylinder,
    'catenoid': catenoid,
}


def get_immersion(name):
    if name not in IMMERSIONS:
        raise metric_lib.Error('Unknown immersion: %s' % name)
    return IMMERSIONS[name]()


def stretched_metric(beta=1.0):
    """g = diag(1 + beta x2^2, 1); no analytic immersion is attached."""
    if beta < 0.0:
        raise ValueError('beta must be nonnegative: %g' % beta)

    def function(points):
        g = numpy.zeros((len(points), 2, 2))
        g[:, 0, 0] = 1.0 + beta * points[:, 1] ** 2
        g[:, 1, 1] = 1.0
        return g

    def gradient(points):
        dg = numpy.zeros((len(points), 2, 2, 2))
        dg[:, 0, 0, 1] = 2.0 * beta * points[:, 1]
        return dg

    return metric_lib.MetricField(function, 'stretched', gradient=gradient)


def expression_metric(g11, g12, g22):
    """Metric from three expressions over ``x1, x2``."""
    entries = [e if isinstance(e, expressions.Expression) else expressions.parse_expression(e)
               for e in (g11, g12, g22)]
    matrix = sympy.Matrix([[entries[0].get_sympy(), entries[1].get_sympy()],
                           [entries[1].get_sympy(), entries[2].get_sympy()]])
    function = _lambdify_array(sympy.Array(matrix.tolist()))
    gradient = _lambdify_array(sympy.Array(
        [[[sympy.diff(matrix[i, j], a) for a in (X1, X2)] for j in range(2)]
         for i in range(2)]))
    name = 'expression[%s; %s; %s]' % tuple(e.get_text() for e in entries)
    return metric_lib.MetricField(function, name, gradient=gradient)


def _cylinder_metric():
    return metric_lib.identity_metric('cylinder', cylinder())


METRICS = {
    'identity': metric_lib.identity_metric,
    'cylinder': _cylinder_metric,
    'catenoid': lambda: catenoid().metric_field(),
    'stretched': stretched_metric,
}


def get_metric(name, *args):
    """Returns a catalog metric by name; `args` go to its constructor."""
    if name not in METRICS:
        raise metric_lib.Error('Unknown metric: %s' % name)
    return METRICS[name](*args)
