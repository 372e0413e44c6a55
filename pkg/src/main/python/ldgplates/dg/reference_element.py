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

"""Nodal Lagrange bases on the reference triangle and square.

The basis of degree k spans P_k on the triangle and Q_k on the square, with
equispaced nodes. Basis functions are represented by their monomial
coefficients, obtained by inverting the Vandermonde matrix at the nodes.
"""

import numpy

from ldgplates.mesh import element_map

MAX_DEGREE = 4


class ReferenceElement(object):
    """Lagrange basis of a given degree on a reference element.

    :param kind: Element kind, ``tri`` or ``quad``.
    :param degree: Polynomial degree, 0 <= degree <= :data:`MAX_DEGREE`.
    """

    def __init__(self, kind, degree):
        if kind not in element_map.REFERENCE_VERTICES:
            raise ValueError('Unknown element kind: %s' % kind)
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError('Degree must lie in [0, %d]: %d' % (MAX_DEGREE, degree))
        self._kind = kind
        self._degree = degree
        if kind == element_map.TRI:
            self._exponents = numpy.array([(a, b) for b in range(degree + 1)
                                           for a in range(degree + 1 - b)])
        else:
            self._exponents = numpy.array([(a, b) for b in range(degree + 1)
                                           for a in range(degree + 1)])
        if degree == 0:
            center = element_map.REFERENCE_VERTICES[kind].mean(axis=0)
            self._nodes = center[None, :]
        else:
            self._nodes = self._exponents / float(degree)
        vandermonde = self._monomials(self._nodes)
        self._coefficients = numpy.linalg.inv(vandermonde)

    def get_kind(self):
        return self._kind

    def get_degree(self):
        return self._degree

    def get_shape(self):
        return element_map.REFERENCE_SHAPES[self._kind]

    def get_nodes(self):
        return self._nodes

    def get_num_functions(self):
        return len(self._exponents)

    def get_vertex_nodes(self):
        """Indices of the nodes sitting on the reference vertices."""
        vertices = element_map.REFERENCE_VERTICES[self._kind]
        return [int(numpy.argmin(numpy.abs(self._nodes - v).sum(axis=1)))
                for v in vertices]

    def _monomials(self, ref, dx=0, dy=0):
        ref = numpy.atleast_2d(ref)
        a, b = self._exponents[:, 0], self._exponents[:, 1]
        x, y = ref[:, 0:1], ref[:, 1:2]
        factor = numpy.ones(len(a))
        for i in range(dx):
            factor = factor * (a - i)
        for i in range(dy):
            factor = factor * (b - i)
        pa = numpy.maximum(a - dx, 0)
        pb = numpy.maximum(b - dy, 0)
        return factor * x ** pa * y ** pb

    def values(self, ref):
        """Returns ``(num_points, num_functions)`` basis values."""
        return self._monomials(ref).dot(self._coefficients)

    def gradients(self, ref):
        """Returns ``(num_points, num_functions, 2)`` reference gradients."""
        return numpy.stack([self._monomials(ref, 1, 0).dot(self._coefficients),
                            self._monomials(ref, 0, 1).dot(self._coefficients)],
                           axis=-1)

    def hessians(self, ref):
        """Returns ``(num_points, num_functions, 2, 2)`` reference Hessians."""
        dxx = self._monomials(ref, 2, 0).dot(self._coefficients)
        dxy = self._monomials(ref, 1, 1).dot(self._coefficients)
        dyy = self._monomials(ref, 0, 2).dot(self._coefficients)
        return numpy.stack([numpy.stack([dxx, dxy], axis=-1),
                            numpy.stack([dxy, dyy], axis=-1)], axis=-2)

    def __str__(self):
        return '%s[kind=%s, degree=%d]' % (self.__class__.__name__, self._kind,
                                           self._degree)
