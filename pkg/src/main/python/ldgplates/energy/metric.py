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

"""Target metrics g and their evaluation at quadrature points."""

import numpy

from ldgplates.utils.math import tensor2


class Error(Exception):
    pass


class NonSPDMetricError(Error):

    def __init__(self, point, value):
        super(NonSPDMetricError, self).__init__(
            'Metric is not SPD at (%g, %g): %s' % (point[0], point[1], value.tolist()))
        self.point = point
        self.value = value


class MetricField(object):
    """A symmetric positive definite 2x2 field x -> g(x).

    :param function: Callable mapping ``(N, 2)`` points to ``(N, 2, 2)``.
    :param name: Display name.
    :param immersion: Optional analytic immersion y_g with grad y_g^T grad y_g = g.
    :param gradient: Optional callable ``(N, 2) -> (N, 2, 2, 2)`` with the
      last axis the derivative direction.
    """

    def __init__(self, function, name='metric', immersion=None, gradient=None,
                 is_identity=False):
        self._function = function
        self._name = name
        self._immersion = immersion
        self._gradient = gradient
        self._is_identity = is_identity
        self._cache = {}

    def get_name(self):
        return self._name

    def get_immersion(self):
        return self._immersion

    def has_immersion(self):
        return self._immersion is not None

    def is_identity(self):
        return self._is_identity

    def __call__(self, points):
        """Values at ``(N, 2)`` points, checked to be SPD."""
        points = numpy.atleast_2d(points)
        g = numpy.asarray(self._function(points), dtype=float).reshape(-1, 2, 2)
        bad = ~tensor2.is_spd(g)
        if bad.any():
            index = numpy.flatnonzero(bad)[0]
            raise NonSPDMetricError(points[index], g[index])
        return g

    def inverse_sqrt(self, points):
        """g^-1/2 by the closed-form 2x2 square root."""
        g = self(points)
        root = tensor2.inv_sqrt_spd(g)
        residual = tensor2.frobenius_norm(root @ root @ g - tensor2.identity_like(g))
        scale = tensor2.frobenius_norm(g) * tensor2.frobenius_norm(tensor2.inv(g))
        if (residual > 1e-12 * scale).any():
            index = numpy.argmax(residual / scale)
            raise Error('Inaccurate inverse square root at (%g, %g): %g'
                        % (points[index][0], points[index][1], residual[index]))
        return root

    def sqrt_det(self, points):
        return numpy.sqrt(tensor2.det(self(points)))

    def gradient(self, points):
        if self._gradient is None:
            raise Error('Metric %s has no gradient' % self._name)
        return numpy.asarray(self._gradient(numpy.atleast_2d(points)), dtype=float)

    def at_quadrature(self, space):
        """``(g, g^-1/2)`` at the element quadrature points, ``(e, q, 2, 2)`` each."""
        key = id(space)
        if key not in self._cache:
            points = space.get_quadrature_points()
            flat = points.reshape(-1, 2)
            shape = points.shape[:2] + (2, 2)
            self._cache[key] = (space, self(flat).reshape(shape),
                                self.inverse_sqrt(flat).reshape(shape))
        return self._cache[key][1:]

    def l1_norm(self, space):
        """Integral of the pointwise Frobenius norm |g|."""
        g, _ = self.at_quadrature(space)
        return float(space.integrate(tensor2.frobenius_norm(g)))

    def mean(self, space):
        g, _ = self.at_quadrature(space)
        return numpy.einsum('eqij,eq->ij', g, space.get_quadrature_weights()) / (
            space.get_mesh().get_area())

    def __str__(self):
        return '%s[%s]' % (self.__class__.__name__, self._name)


def _identity(points):
    return numpy.broadcast_to(numpy.eye(2), (len(points), 2, 2)).copy()


def _zero_gradient(points):
    return numpy.zeros((len(points), 2, 2, 2))


def identity_metric(name='identity', immersion=None):
    return MetricField(_identity, name, immersion=immersion, gradient=_zero_gradient,
                       is_identity=True)
