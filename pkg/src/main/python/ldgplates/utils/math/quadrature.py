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

"""Gauss-type quadrature rules on the reference segment, square and triangle.

The reference segment is [0, 1], the reference square is [0, 1]^2 and the
reference triangle has the vertices (0, 0), (1, 0), (0, 1).
"""

import numpy
from scipy import special

SEGMENT = 'segment'
SQUARE = 'square'
TRIANGLE = 'triangle'


class QuadratureRule(object):
    """Points and weights of a rule exact for polynomials up to `degree`."""

    def __init__(self, shape, points, weights, degree):
        self._shape = shape
        self._points = numpy.asarray(points, dtype=float)
        self._weights = numpy.asarray(weights, dtype=float)
        self._degree = degree

    def get_shape(self):
        return self._shape

    def get_points(self):
        return self._points

    def get_weights(self):
        return self._weights

    def get_degree(self):
        return self._degree

    def __len__(self):
        return len(self._weights)

    def __str__(self):
        return '%s[shape=%s, degree=%d, points=%d]' % (
            self.__class__.__name__, self._shape, self._degree, len(self))


def gauss_legendre(num_points):
    """Returns Gauss-Legendre points and weights mapped onto [0, 1]."""
    if num_points < 1:
        raise ValueError('num_points must be positive: %d' % num_points)
    x, w = special.roots_legendre(num_points)
    return 0.5 * (x + 1.0), 0.5 * w


def segment_rule(degree):
    n = max(1, degree // 2 + 1)
    x, w = gauss_legendre(n)
    return QuadratureRule(SEGMENT, x, w, 2 * n - 1)


def square_rule(degree):
    n = max(1, degree // 2 + 1)
    x, w = gauss_legendre(n)
    xx, yy = numpy.meshgrid(x, x, indexing='ij')
    ww = numpy.outer(w, w)
    points = numpy.column_stack([xx.ravel(), yy.ravel()])
    return QuadratureRule(SQUARE, points, ww.ravel(), 2 * n - 1)


def triangle_rule(degree):
    """Collapsed tensor Gauss rule on the reference triangle.

    The square point (u, v) maps to (u (1 - v), v) with Jacobian (1 - v); the
    extra factor raises the polynomial degree in v by one.
    """
    n = max(1, degree // 2 + 2)
    x, w = gauss_legendre(n)
    uu, vv = numpy.meshgrid(x, x, indexing='ij')
    ww = numpy.outer(w, w) * (1.0 - vv)
    points = numpy.column_stack([(uu * (1.0 - vv)).ravel(), vv.ravel()])
    return QuadratureRule(TRIANGLE, points, ww.ravel(), 2 * n - 2)


def element_rule(shape, degree):
    if shape == TRIANGLE:
        return triangle_rule(degree)
    if shape == SQUARE:
        return square_rule(degree)
    raise ValueError('Unknown reference shape: %s' % shape)
